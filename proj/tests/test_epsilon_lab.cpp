#include "brocard/conditions.hpp"
#include "brocard/epsilon_lab.hpp"
#include "brocard/errors.hpp"
#include "brocard/example_table.hpp"

#include <doctest.h>

using namespace brocard;

TEST_CASE("epsilon_digits") {
  CHECK(epsilon_digits(2, 9).to_string() == "0.414213562");
  // sqrt(8!) = 200.79840636...; the printed 0.7984064 is the rounded value.
  CHECK(epsilon_digits(8, 7).to_string() == "0.7984063");
  CHECK(matches_printed(epsilon_digits(8, 7), "0.7984064"));
  CHECK(epsilon_digits(9, 7).to_string() == "0.3952191");
  CHECK(epsilon_digits(1, 5).to_string() == "0.00000");
  CHECK_THROWS_AS(epsilon_digits(20, 5, PrecisionLimits{kDefaultBitBudget, 10}),
                  ResourceLimitError);
}

TEST_CASE("epsilon_of_k") {
  CHECK(epsilon_of_k(Natural(4), 9).to_string() == "0.898979485");
  CHECK(matches_printed(epsilon_of_k(Natural(4), 9), "0.898979486"));
  CHECK(epsilon_of_k(Natural(10), 8).to_string() == "0.95445115");
  CHECK(epsilon_of_k(Natural(1), 9).to_string() == "0.732050807");
  CHECK_THROWS_AS(epsilon_of_k(Natural(0), 9), DomainError);
}

TEST_CASE("a solution's epsilon is exactly f(k)") {
  for (std::uint64_t n : {4, 5, 7}) {
    const Natural k = verify(n).k;
    for (std::size_t d : {5u, 40u, 300u}) {
      CHECK(epsilon_digits(n, d) == epsilon_of_k(k, d));
    }
  }
  // And it is not for a non-solution.
  CHECK_FALSE(epsilon_digits(6, 20) == epsilon_of_k(verify(6).k, 20));
}

TEST_CASE("k_ratio_digits") {
  CHECK(k_ratio_digits(6, 8).to_string() == "2.07430412");
  CHECK(k_ratio_digits(10, 9).to_string() == "7.496063447");
  CHECK(k_ratio_digits(7, 2).to_string() == "70.00");
  CHECK(k_ratio_digits(4, 3).to_string() == "4.000");
  CHECK(k_ratio_digits(2, 9).to_string() == "0.146446609");
  CHECK_THROWS_AS(k_ratio_digits(1, 5), DomainError);
  CHECK_THROWS_AS(k_ratio_digits(0, 5), DomainError);
}

TEST_CASE("k_ratio_digits agrees with a high-precision rational evaluation") {
  // Independent route: eps from 200 digits, ratio by exact rational
  // arithmetic, truncated.
  for (std::uint64_t n = 2; n <= 40; ++n) {
    if (verify(n).is_solution) continue;
    const ScaledDecimal eps = epsilon_digits(n, 200);
    mpq_class e(eps.mantissa.mpz(), Natural::pow10(200).mpz());
    e.canonicalize();
    mpq_class ratio = e * e / (2 * (1 - e));
    ratio.canonicalize();
    mpz_class scaled = ratio.get_num() * Natural::pow10(12).mpz() / ratio.get_den();
    CHECK(k_ratio_digits(n, 12).mantissa.mpz() == scaled);
  }
}

TEST_CASE("nine_run") {
  const EpsilonProfile seven = nine_run(7, 1024);
  CHECK(seven.nine_run == std::optional<std::size_t>(2));
  CHECK_FALSE(seven.nine_run_is_lower_bound);
  CHECK(nine_run(4).nine_run == std::optional<std::size_t>(0));
  CHECK(nine_run(9).nine_run == std::optional<std::size_t>(0));
}

TEST_CASE("nine runs longer than the starting precision and capped runs") {
  // f(k) = 1 - 1/(2k) + ..., so k = 10^100 gives a long run of nines.
  const Natural k = Natural::pow10(100);
  const Natural x = k * (k + Natural(2));
  const EpsilonProfile full = sqrt_nine_run(x, 4096);
  REQUIRE(full.nine_run.has_value());
  CHECK(*full.nine_run == 100);
  CHECK_FALSE(full.nine_run_is_lower_bound);
  CHECK(full.precision_steps == 2);  // 64 digits, then 128

  const EpsilonProfile capped = sqrt_nine_run(x, 80);
  CHECK(capped.nine_run == std::optional<std::size_t>(80));
  CHECK(capped.nine_run_is_lower_bound);

  CHECK_THROWS_AS(sqrt_nine_run(x, 0), DomainError);
}

TEST_CASE("required-epsilon nine run tracks the size of k") {
  // For k = floor(sqrt(n!)), 1 - f(k) ~ 1/(2k), so the run is about
  // log10(2k).
  for (std::uint64_t n : {20, 50, 120}) {
    const Natural k = verify(n).k;
    const EpsilonProfile p = nine_run_of_required_epsilon(n);
    REQUIRE(p.nine_run.has_value());
    const std::size_t len = (k * Natural(2)).decimal_length();
    CHECK(*p.nine_run + 1 >= len - 1);
    CHECK(*p.nine_run <= len);
  }
}

TEST_CASE("check_f_monotone") {
  CHECK(check_f_monotone(1, 100, 10));
  CHECK(check_f_monotone(4, 70, 10));
  CHECK(epsilon_of_k(Natural(4), 10).mantissa < epsilon_of_k(Natural(10), 10).mantissa);
  CHECK(epsilon_of_k(Natural(10), 10).mantissa < epsilon_of_k(Natural(70), 10).mantissa);
  CHECK_THROWS_AS(check_f_monotone(5, 5, 10), DomainError);
  CHECK_THROWS_AS(check_f_monotone(0, 5, 10), DomainError);
  CHECK_THROWS_AS(check_f_monotone(1, 100, 7), DomainError);  // needs 2*3+2 = 8
  CHECK(check_f_monotone(1, 100, 8));
}

TEST_CASE("printed example digits are reproduced for n = 2..11") {
  for (const ReferenceRow& ref : reference_rows()) {
    if (ref.n < 2) continue;
    const TableRow row = table_row(ref.n, 10);
    REQUIRE(row.reference.has_value());
    CHECK(row.reference->epsilon_matches);
    CHECK(row.reference->ratio_matches);
    const bool misprint_expected = ref.n == 8 || ref.n == 11;
    CHECK(row.reference->flags.empty() == !misprint_expected);
  }
}
