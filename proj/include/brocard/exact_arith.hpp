#pragma once

#include "brocard/natural.hpp"

#include <cstddef>
#include <cstdint>

namespace brocard {

/// Default ceiling on the bit length of the scaled operand in sqrt_digits.
inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 26;

/// Floor square root: returns s with s^2 <= x < (s+1)^2.
///
/// Newton's iteration started from above. Large inputs take their seed from
/// the square root of their top half, so the iteration converges in a
/// couple of full-width steps; a final adjustment loop enforces the floor
/// contract regardless of how the iteration terminated.
Natural isqrt(const Natural& x);

/// sqrt(x) truncated to `digits` fractional decimal digits.
///
/// The mantissa is isqrt(x * 10^(2*digits)). Throws ResourceLimitError when
/// the scaled operand would exceed `bit_budget` bits.
ScaledDecimal sqrt_digits(const Natural& x, std::size_t digits,
                          std::uint64_t bit_budget = kDefaultBitBudget);

/// Floor r-th root: y with y^r <= x < (y+1)^r. Requires r >= 1.
Natural root_floor(const Natural& x, unsigned r);

/// x - root_floor(x, r)^r.
Natural root_defect(const Natural& x, unsigned r);

/// a*b mod p without overflow. Requires p >= 1.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;

/// a^e mod p by square-and-multiply. Requires p >= 2 and a < p.
std::uint64_t modpow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept;

/// Legendre symbol (a|p) by Euler's criterion; p must be an odd prime, a < p.
int legendre(std::uint64_t a, std::uint64_t p);

/// Deterministic primality test valid for every 64-bit input.
bool is_prime_64(std::uint64_t n) noexcept;

}  // namespace brocard
