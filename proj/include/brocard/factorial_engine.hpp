#pragma once

#include "brocard/natural.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace brocard {

/// Largest scan ceiling a pool supports (exclusive).
inline constexpr std::uint64_t kMaxScanCeiling = std::uint64_t{1} << 32;

/// Default ceiling on n for factorial_exact.
inline constexpr std::uint64_t kDefaultExactCeiling = 10'000'000;

inline constexpr std::size_t kDefaultPoolSize = 48;

/// Filter primes for a scan over n <= max_n. Every prime exceeds max_n,
/// so none of them divides any scanned n!.
struct PrimePool {
  std::uint64_t max_n = 0;
  std::vector<std::uint64_t> primes;

  friend bool operator==(const PrimePool&, const PrimePool&) = default;
};

/// Scan cursor: residues[i] == n! mod pool.primes[i]; `exact` optionally
/// carries n! itself.
struct FactorialState {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> residues;
  std::optional<Natural> exact;

  /// State for n = 0 (0! = 1) over the given pool.
  static FactorialState initial(const PrimePool& pool, bool carry_exact = false);

  friend bool operator==(const FactorialState&, const FactorialState&) = default;
};

/// The `count` smallest odd primes strictly greater than max_n.
/// Throws DomainError when max_n >= 2^32 or count == 0.
PrimePool build_prime_pool(std::uint64_t max_n, std::size_t count);

/// Steps the cursor from n to n+1. Throws ResourceLimitError at the pool's
/// scan ceiling.
FactorialState advance(FactorialState state, const PrimePool& pool);

/// n! by a balanced product tree. Throws ResourceLimitError when n exceeds
/// `ceiling`.
Natural factorial_exact(std::uint64_t n, std::uint64_t ceiling = kDefaultExactCeiling);

/// Product lo * (lo+1) * ... * hi mod p; 1 for an empty range. Requires
/// hi < 2^64 - 1.
std::uint64_t range_product_mod(std::uint64_t lo, std::uint64_t hi, std::uint64_t p) noexcept;

/// Returns n when x == n!, choosing 0 for x == 1.
std::optional<std::uint64_t> is_factorial(const Natural& x);

}  // namespace brocard
