#include "brocard/factorial_engine.hpp"

#include "brocard/errors.hpp"
#include "brocard/exact_arith.hpp"

#include <limits>
#include <string>

namespace brocard {

namespace {

// Product of lo..hi (inclusive, lo <= hi). Short runs are multiplied in a
// machine word before touching GMP.
mpz_class product_tree(std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo < 16) {
    mpz_class acc = 1;
    std::uint64_t word = 1;
    for (std::uint64_t i = lo; i <= hi; ++i) {
      if (word > std::numeric_limits<std::uint64_t>::max() / i) {
        acc *= static_cast<unsigned long>(word);
        word = 1;
      }
      word *= i;
    }
    acc *= static_cast<unsigned long>(word);
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return product_tree(lo, mid) * product_tree(mid + 1, hi);
}

}  // namespace

FactorialState FactorialState::initial(const PrimePool& pool, bool carry_exact) {
  FactorialState state;
  state.residues.assign(pool.primes.size(), 1);
  if (carry_exact) state.exact = Natural(1);
  return state;
}

PrimePool build_prime_pool(std::uint64_t max_n, std::size_t count) {
  if (max_n >= kMaxScanCeiling) {
    throw DomainError("scan ceiling " + std::to_string(max_n) + " is not below 2^32");
  }
  if (count == 0) throw DomainError("prime pool must contain at least one prime");

  PrimePool pool{max_n, {}};
  pool.primes.reserve(count);
  std::uint64_t candidate = max_n + 1;
  if (candidate < 3) candidate = 3;
  if (candidate % 2 == 0) ++candidate;
  for (; pool.primes.size() < count; candidate += 2) {
    if (is_prime_64(candidate)) pool.primes.push_back(candidate);
  }
  return pool;
}

FactorialState advance(FactorialState state, const PrimePool& pool) {
  if (state.n >= pool.max_n) {
    throw ResourceLimitError("advance: cursor already at scan ceiling " +
                             std::to_string(pool.max_n));
  }
  const std::uint64_t next = state.n + 1;
  for (std::size_t i = 0; i < state.residues.size(); ++i) {
    state.residues[i] = mulmod(state.residues[i], next % pool.primes[i], pool.primes[i]);
  }
  if (state.exact) *state.exact *= Natural(next);
  state.n = next;
  return state;
}

Natural factorial_exact(std::uint64_t n, std::uint64_t ceiling) {
  if (n > ceiling) {
    throw ResourceLimitError("factorial_exact: n=" + std::to_string(n) +
                             " exceeds the exact ceiling " + std::to_string(ceiling));
  }
  if (n < 2) return Natural(1);
  return Natural::from_mpz(product_tree(2, n));
}

std::uint64_t range_product_mod(std::uint64_t lo, std::uint64_t hi, std::uint64_t p) noexcept {
  std::uint64_t acc = 1 % p;
  for (std::uint64_t i = lo; i <= hi; ++i) acc = mulmod(acc, i % p, p);
  return acc;
}

std::optional<std::uint64_t> is_factorial(const Natural& x) {
  if (x.is_zero()) return std::nullopt;
  if (x == Natural(1)) return 0;
  mpz_class q = x.mpz();
  for (unsigned long d = 2;; ++d) {
    if (mpz_divisible_ui_p(q.get_mpz_t(), d) == 0) return std::nullopt;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), d);
    if (q == 1) return d;
  }
}

}  // namespace brocard
