#include "brocard/exact_arith.hpp"

#include "brocard/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace brocard {

namespace {

__extension__ using u128 = unsigned __int128;

mpz_class isqrt_mpz(const mpz_class& x) {
  if (x < 2) return x;
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);

  // seed >= sqrt(x) in both branches.
  mpz_class s;
  if (bits <= 128) {
    mpz_setbit(s.get_mpz_t(), (bits + 1) / 2);
  } else {
    const std::size_t shift = 2 * (bits / 4);
    mpz_class top;
    mpz_fdiv_q_2exp(top.get_mpz_t(), x.get_mpz_t(), shift);
    s = isqrt_mpz(top) + 1;
    mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), shift / 2);
  }

  mpz_class y;
  for (;;) {
    mpz_fdiv_q(y.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    y += s;
    mpz_fdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), 1);
    if (y >= s) break;
    s.swap(y);
  }

  while (s * s > x) --s;
  for (;;) {
    const mpz_class next = s + 1;
    if (next * next > x) break;
    s = next;
  }
  return s;
}

mpz_class pow_mpz(const mpz_class& base, unsigned r) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), r);
  return out;
}

mpz_class root_floor_mpz(const mpz_class& x, unsigned r) {
  if (r == 1 || x < 2) return x;
  if (r == 2) return isqrt_mpz(x);

  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  // 2^ceil(bits/r) > x^(1/r).
  mpz_class s;
  mpz_setbit(s.get_mpz_t(), (bits + r - 1) / r);

  mpz_class y;
  for (;;) {
    // y = ((r-1)*s + x / s^(r-1)) / r
    mpz_fdiv_q(y.get_mpz_t(), x.get_mpz_t(), pow_mpz(s, r - 1).get_mpz_t());
    y += (r - 1) * s;
    mpz_fdiv_q_ui(y.get_mpz_t(), y.get_mpz_t(), r);
    if (y >= s) break;
    s.swap(y);
  }

  while (pow_mpz(s, r) > x) --s;
  while (pow_mpz(s + 1, r) <= x) ++s;
  return s;
}

}  // namespace

Natural isqrt(const Natural& x) { return Natural::from_mpz(isqrt_mpz(x.mpz())); }

ScaledDecimal sqrt_digits(const Natural& x, std::size_t digits, std::uint64_t bit_budget) {
  const double scaled_bits =
      static_cast<double>(x.bit_length()) + 2.0 * static_cast<double>(digits) * std::log2(10.0);
  if (scaled_bits > static_cast<double>(bit_budget)) {
    throw ResourceLimitError("sqrt_digits: operand of ~" +
                             std::to_string(static_cast<std::uint64_t>(scaled_bits)) +
                             " bits exceeds the bit budget of " + std::to_string(bit_budget));
  }
  const Natural scaled = x * Natural::pow10(2 * digits);
  return ScaledDecimal{isqrt(scaled), digits};
}

Natural root_floor(const Natural& x, unsigned r) {
  if (r == 0) throw DomainError("root_floor: degree must be at least 1");
  return Natural::from_mpz(root_floor_mpz(x.mpz(), r));
}

Natural root_defect(const Natural& x, unsigned r) {
  return x - Natural::pow(root_floor(x, r), r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  if (((a | b) >> 32) == 0) return (a * b) % p;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t modpow(std::uint64_t a, std::uint64_t e, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  const std::uint64_t t = modpow(a, (p - 1) / 2, p);
  if (t == 1) return 1;
  if (t == p - 1) return -1;
  throw DomainError("legendre: modulus " + std::to_string(p) + " is not an odd prime");
}

bool is_prime_64(std::uint64_t n) noexcept {
  // The first twelve primes as Miller-Rabin witnesses are deterministic
  // for every n < 3.3e24, which covers all 64-bit inputs.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                               17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }

  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = modpow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace brocard
