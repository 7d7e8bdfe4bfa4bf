#include "brocard/epsilon_lab.hpp"

#include "brocard/conditions.hpp"
#include "brocard/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace brocard {

namespace {

std::size_t leading_nines(const std::string& digits) {
  const auto it = std::find_if(digits.begin(), digits.end(), [](char c) { return c != '9'; });
  return static_cast<std::size_t>(it - digits.begin());
}

Natural ratio_floor(const Natural& eps, const Natural& scale, std::size_t digits) {
  // floor((eps/scale)^2 / (2 (1 - eps/scale)) * 10^digits)
  const Natural num = eps * eps * Natural::pow10(digits);
  const Natural den = Natural(2) * scale * (scale - eps);
  return num / den;
}

}  // namespace

ScaledDecimal sqrt_fraction(const Natural& x, std::size_t digits, std::uint64_t bit_budget) {
  ScaledDecimal s = sqrt_digits(x, digits, bit_budget);
  s.mantissa %= Natural::pow10(digits);
  return s;
}

ScaledDecimal epsilon_digits(std::uint64_t n, std::size_t digits, const PrecisionLimits& limits) {
  return sqrt_fraction(factorial_exact(n, limits.exact_ceiling), digits, limits.bit_budget);
}

ScaledDecimal epsilon_of_k(const Natural& k, std::size_t digits, std::uint64_t bit_budget) {
  if (k.is_zero()) throw DomainError("epsilon_of_k: k must be at least 1");
  // k <= sqrt(k^2 + 2k) < k + 1, so the fractional part is f(k).
  return sqrt_fraction(k * (k + Natural(2)), digits, bit_budget);
}

ScaledDecimal k_ratio_digits(std::uint64_t n, std::size_t digits, const PrecisionLimits& limits) {
  if (n < 2) throw DomainError("k_ratio_digits: eps is 0 for n < 2, ratio undefined");
  const Natural factorial = factorial_exact(n, limits.exact_ceiling);
  const VerifyReport report = verify_with_factorial(n, factorial);
  if (report.is_solution) {
    // eps(2k + eps) = 2k is equivalent to eps^2 / (2(1-eps)) = k exactly.
    return ScaledDecimal{report.k * Natural::pow10(digits), digits};
  }

  // Otherwise the ratio is irrational; bracket it with eps in [E, E+1) / 10^D
  // and widen the guard digits until both ends truncate to the same value.
  constexpr std::size_t kGuard = 10;
  constexpr std::size_t kStabilityGuard = 5;
  constexpr std::size_t kMaxGuard = 4096;
  for (std::size_t guard = kGuard;; guard += kStabilityGuard) {
    if (guard > kMaxGuard) {
      throw ResourceLimitError("k_ratio_digits: could not certify digits within guard limit");
    }
    const std::size_t working = digits + guard;
    const Natural scale = Natural::pow10(working);
    const Natural eps = sqrt_fraction(factorial, working, limits.bit_budget).mantissa;
    const Natural eps_hi = eps + Natural(1);
    if (eps_hi >= scale) continue;
    const Natural lower = ratio_floor(eps, scale, digits);
    if (lower != ratio_floor(eps_hi, scale, digits)) continue;

    const std::size_t check = working + kStabilityGuard;
    const Natural check_scale = Natural::pow10(check);
    const Natural check_eps = sqrt_fraction(factorial, check, limits.bit_budget).mantissa;
    if (ratio_floor(check_eps, check_scale, digits) != lower) {
      throw std::logic_error("k_ratio_digits: digits unstable under extra guard digits");
    }
    return ScaledDecimal{lower, digits};
  }
}

EpsilonProfile sqrt_nine_run(const Natural& x, std::size_t cap, std::uint64_t bit_budget) {
  if (cap == 0) throw DomainError("nine_run: cap must be positive");
  EpsilonProfile profile;
  profile.digits_requested = cap;

  std::string previous;
  for (std::size_t digits = std::min(kNineRunStartDigits, cap);;
       digits = std::min(digits * 2, cap)) {
    const ScaledDecimal root = sqrt_digits(x, digits, bit_budget);
    const Natural scaled = x * Natural::pow10(2 * digits);
    const Natural above = root.mantissa + Natural(1);
    if (root.mantissa * root.mantissa > scaled || above * above <= scaled) {
      throw std::logic_error("nine_run: scaled isqrt bracket violated at " +
                             std::to_string(digits) + " digits");
    }
    ++profile.precision_steps;

    ScaledDecimal frac{root.mantissa % Natural::pow10(digits), digits};
    std::string fraction = frac.fraction_string();
    if (fraction.compare(0, previous.size(), previous) != 0) {
      throw std::logic_error("nine_run: truncated digits changed when precision grew");
    }
    const std::size_t run = leading_nines(fraction);
    profile.epsilon = std::move(frac);
    if (run < digits) {
      profile.nine_run = run;
      return profile;
    }
    if (digits == cap) {
      profile.nine_run = cap;
      profile.nine_run_is_lower_bound = true;
      return profile;
    }
    previous = std::move(fraction);
  }
}

EpsilonProfile nine_run(std::uint64_t n, std::size_t cap, const PrecisionLimits& limits) {
  EpsilonProfile profile =
      sqrt_nine_run(factorial_exact(n, limits.exact_ceiling), cap, limits.bit_budget);
  profile.n = n;
  return profile;
}

EpsilonProfile nine_run_of_required_epsilon(std::uint64_t n, std::size_t cap,
                                            const PrecisionLimits& limits) {
  const Natural k = isqrt(factorial_exact(n, limits.exact_ceiling));
  if (k.is_zero()) throw DomainError("nine_run_of_required_epsilon: k must be at least 1");
  EpsilonProfile profile = sqrt_nine_run(k * (k + Natural(2)), cap, limits.bit_budget);
  profile.n = n;
  return profile;
}

bool check_f_monotone(std::uint64_t k_from, std::uint64_t k_to, std::size_t digits) {
  if (k_from < 1 || k_from >= k_to) {
    throw DomainError("check_f_monotone: need 1 <= k_from < k_to");
  }
  const std::size_t needed = 2 * Natural(k_to).decimal_length() + 2;
  if (digits < needed) {
    throw DomainError("check_f_monotone: " + std::to_string(digits) +
                      " digits cannot separate f(k) up to k=" + std::to_string(k_to) +
                      "; need at least " + std::to_string(needed));
  }
  const Natural one = Natural::pow10(digits);
  Natural previous = epsilon_of_k(Natural(k_from), digits).mantissa;
  for (std::uint64_t k = k_from + 1; k <= k_to; ++k) {
    Natural current = epsilon_of_k(Natural(k), digits).mantissa;
    if (!(previous < current) || !(current < one)) return false;
    previous = std::move(current);
  }
  return true;
}

}  // namespace brocard
