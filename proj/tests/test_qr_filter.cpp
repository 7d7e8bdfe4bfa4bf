#include "brocard/conditions.hpp"
#include "brocard/exact_arith.hpp"
#include "brocard/qr_filter.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace brocard;

namespace {

FactorialState state_at(std::uint64_t n, const PrimePool& pool) {
  FactorialState s = FactorialState::initial(pool);
  while (s.n < n) s = advance(std::move(s), pool);
  return s;
}

}  // namespace

TEST_CASE("passes examples") {
  const PrimePool eleven{10, {11}};

  const FilterOutcome six = passes(state_at(6, eleven), eleven);
  CHECK_FALSE(six.passed);
  CHECK(six.rejecting_prime == std::optional<std::uint64_t>(11));
  CHECK(six.symbols_evaluated == 1);

  const FilterOutcome four = passes(state_at(4, eleven), eleven);
  CHECK(four.passed);
  CHECK_FALSE(four.rejecting_prime.has_value());
  CHECK(four.symbols_evaluated == 1);

  for (std::uint64_t max_n : {7ULL, 100ULL, 5000ULL}) {
    const PrimePool pool = build_prime_pool(max_n, 48);
    const FilterOutcome seven = passes(state_at(7, pool), pool);
    CHECK(seven.passed);
    CHECK(seven.symbols_evaluated == 48);
  }
}

TEST_CASE("filter is sound for n <= 2000") {
  const PrimePool pool = build_prime_pool(2000, 48);
  FactorialState s = FactorialState::initial(pool);
  Natural f(1);
  while (s.n < 2000) {
    s = advance(std::move(s), pool);
    f *= Natural(s.n);
    const FilterOutcome out = passes(s, pool);
    CHECK(out.passed == !out.rejecting_prime.has_value());
    CHECK(out.symbols_evaluated >= 1);
    if (verify_with_factorial(s.n, f).is_solution) {
      REQUIRE(out.passed);
      for (std::size_t i = 0; i < pool.primes.size(); ++i) {
        const std::uint64_t p = pool.primes[i];
        CHECK(legendre((s.residues[i] + 1) % p, p) >= 0);
      }
    }
  }
}

TEST_CASE("filter verdict matches enumerated square sets for n <= 500") {
  const PrimePool pool = build_prime_pool(500, 6);
  std::vector<std::set<std::uint64_t>> squares;
  for (std::uint64_t p : pool.primes) squares.push_back(oracle::squares_mod(p));

  mpz_class f = 1;
  FactorialState s = FactorialState::initial(pool);
  while (s.n < 500) {
    s = advance(std::move(s), pool);
    f *= static_cast<unsigned long>(s.n);
    std::optional<std::uint64_t> expected;
    for (std::size_t i = 0; i < pool.primes.size() && !expected; ++i) {
      const std::uint64_t p = pool.primes[i];
      const std::uint64_t shifted = mpz_fdiv_ui(mpz_class(f + 1).get_mpz_t(), p);
      if (!squares[i].count(shifted)) expected = p;
    }
    const FilterOutcome out = passes(s, pool);
    REQUIRE(out.rejecting_prime == expected);
  }
}

TEST_CASE("rejecting prime is the first rejector in pool order") {
  const PrimePool pool = build_prime_pool(300, 48);
  FactorialState s = FactorialState::initial(pool);
  while (s.n < 300) {
    s = advance(std::move(s), pool);
    const FilterOutcome out = passes(s, pool);
    std::size_t first = pool.primes.size();
    for (std::size_t i = 0; i < pool.primes.size(); ++i) {
      if (legendre((s.residues[i] + 1) % pool.primes[i], pool.primes[i]) < 0) {
        first = i;
        break;
      }
    }
    if (first == pool.primes.size()) {
      CHECK(out.passed);
      CHECK(out.symbols_evaluated == pool.primes.size());
    } else {
      CHECK(out.rejecting_prime == std::optional<std::uint64_t>(pool.primes[first]));
      CHECK(out.symbols_evaluated == first + 1);
    }
  }
}

TEST_CASE("symbol 0 does not reject") {
  // 4! + 1 = 25 and 5 | 25; a pool holding 5 must let n = 4 through.
  const PrimePool pool{4, {5}};
  const FilterOutcome out = passes(state_at(4, pool), pool);
  CHECK(out.passed);
}
