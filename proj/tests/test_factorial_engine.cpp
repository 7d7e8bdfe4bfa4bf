#include "brocard/errors.hpp"
#include "brocard/factorial_engine.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace brocard;

namespace {

std::vector<std::uint64_t> trial_primes_above(std::uint64_t floor, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = floor + 1; out.size() < count; ++c) {
    if (c > 2 && oracle::is_prime_trial(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("build_prime_pool examples") {
  CHECK(build_prime_pool(10, 3).primes == std::vector<std::uint64_t>{11, 13, 17});
  CHECK(build_prime_pool(1'000'000, 1).primes == std::vector<std::uint64_t>{1000003});
  CHECK_THROWS_AS(build_prime_pool(kMaxScanCeiling, 1), DomainError);
  CHECK_THROWS_AS(build_prime_pool(100, 0), DomainError);
}

TEST_CASE("build_prime_pool returns the smallest odd primes above the ceiling") {
  for (std::uint64_t max_n : {0ULL, 1ULL, 2ULL, 100ULL, 2000ULL, 65536ULL, 999'983ULL}) {
    const PrimePool pool = build_prime_pool(max_n, 48);
    CHECK(pool.max_n == max_n);
    CHECK(pool.primes == trial_primes_above(max_n, 48));
  }
  const PrimePool top = build_prime_pool(kMaxScanCeiling - 1, 2);
  CHECK(top.primes == std::vector<std::uint64_t>{4294967311ULL, 4294967357ULL});
}

TEST_CASE("advance examples") {
  const PrimePool pool = build_prime_pool(10, 1);  // {11}
  FactorialState s = FactorialState::initial(pool);
  for (int i = 0; i < 5; ++i) s = advance(std::move(s), pool);
  CHECK(s.n == 5);
  CHECK(s.residues[0] == 10);  // 120 mod 11
  s = advance(std::move(s), pool);
  CHECK(s.residues[0] == 5);   // 720 mod 11

  FactorialState zero = FactorialState::initial(build_prime_pool(10, 3));
  zero = advance(std::move(zero), build_prime_pool(10, 3));
  CHECK(zero.n == 1);
  CHECK(zero.residues == std::vector<std::uint64_t>{1, 1, 1});

  FactorialState exact = FactorialState::initial(pool, true);
  for (int i = 0; i < 4; ++i) exact = advance(std::move(exact), pool);
  CHECK(*exact.exact == Natural(24));
  exact = advance(std::move(exact), pool);
  CHECK(*exact.exact == Natural(120));
}

TEST_CASE("advance refuses to pass the scan ceiling") {
  const PrimePool pool = build_prime_pool(3, 2);
  FactorialState s = FactorialState::initial(pool);
  for (int i = 0; i < 3; ++i) s = advance(std::move(s), pool);
  CHECK_THROWS_AS(advance(s, pool), ResourceLimitError);
}

TEST_CASE("residue stream matches exact factorials up to 2000") {
  const PrimePool pool = build_prime_pool(2000, 48);
  FactorialState s = FactorialState::initial(pool, true);
  while (s.n < 2000) {
    s = advance(std::move(s), pool);
    for (std::size_t i = 0; i < pool.primes.size(); ++i) {
      REQUIRE(s.residues[i] != 0);
      REQUIRE(s.residues[i] < pool.primes[i]);
      REQUIRE(s.residues[i] == s.exact->mod_u64(pool.primes[i]));
    }
    if (s.n % 250 == 0) {
      const Natural f = factorial_exact(s.n);
      CHECK(*s.exact == f);
      for (std::size_t i = 0; i < pool.primes.size(); ++i) {
        CHECK(s.residues[i] == f.mod_u64(pool.primes[i]));
      }
    }
  }
}

TEST_CASE("factorial_exact examples and ceiling") {
  CHECK(factorial_exact(0) == Natural(1));
  CHECK(factorial_exact(1) == Natural(1));
  CHECK(factorial_exact(7) == Natural(5040));
  CHECK(factorial_exact(10) == Natural(3628800));
  CHECK_THROWS_AS(factorial_exact(101, 100), ResourceLimitError);
  CHECK_NOTHROW(factorial_exact(100, 100));
}

TEST_CASE("factorial_exact agrees with the sequential product up to 5000") {
  mpz_class running = 1;
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    if (n >= 2) running *= static_cast<unsigned long>(n);
    if (n % 97 == 0 || n > 4990 || n < 40) {
      REQUIRE(factorial_exact(n).mpz() == running);
    }
  }
  CHECK(factorial_exact(5000).mpz() == oracle::factorial_sequential(5000));
  mpz_class gmp;
  mpz_fac_ui(gmp.get_mpz_t(), 20000);
  CHECK(factorial_exact(20000).mpz() == gmp);
}

TEST_CASE("range_product_mod") {
  CHECK(range_product_mod(3, 2, 7) == 1);
  CHECK(range_product_mod(1, 6, 11) == 5);
  CHECK(range_product_mod(5, 5, 11) == 5);
}

TEST_CASE("is_factorial") {
  CHECK(is_factorial(Natural(5040)) == std::optional<std::uint64_t>(7));
  CHECK_FALSE(is_factorial(Natural(100)).has_value());
  CHECK(is_factorial(Natural(1)) == std::optional<std::uint64_t>(0));
  CHECK_FALSE(is_factorial(Natural(0)).has_value());
  CHECK(is_factorial(Natural(2)) == std::optional<std::uint64_t>(2));
  CHECK_FALSE(is_factorial(Natural(3)).has_value());
  CHECK_FALSE(is_factorial(factorial_exact(30) + Natural(1)).has_value());
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    REQUIRE(is_factorial(factorial_exact(n)) == std::optional<std::uint64_t>(n));
  }
}
