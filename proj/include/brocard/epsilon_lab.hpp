#pragma once

#include "brocard/exact_arith.hpp"
#include "brocard/factorial_engine.hpp"
#include "brocard/natural.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace brocard {

// Fixed-point views of eps = sqrt(n!) - floor(sqrt(n!)) and of
// f(k) = sqrt(k^2 + 2k) - k. All digits are truncated, never rounded.

inline constexpr std::size_t kDefaultNineRunCap = std::size_t{1} << 21;
inline constexpr std::size_t kNineRunStartDigits = 64;

struct PrecisionLimits {
  std::uint64_t bit_budget = kDefaultBitBudget;
  std::uint64_t exact_ceiling = kDefaultExactCeiling;
};

struct EpsilonProfile {
  std::uint64_t n = 0;
  std::size_t digits_requested = 0;  // cap
  ScaledDecimal epsilon;             // at the final precision reached
  std::optional<std::size_t> nine_run;
  bool nine_run_is_lower_bound = false;
  std::size_t precision_steps = 0;   // each step re-checked the isqrt bracket
};

/// Fractional part of sqrt(x) to `digits` truncated digits.
ScaledDecimal sqrt_fraction(const Natural& x, std::size_t digits,
                            std::uint64_t bit_budget = kDefaultBitBudget);

ScaledDecimal epsilon_digits(std::uint64_t n, std::size_t digits, const PrecisionLimits& limits = {});

/// f(k) = sqrt(k^2+2k) - k, the eps a solution with floor k would need.
/// Requires k >= 1.
ScaledDecimal epsilon_of_k(const Natural& k, std::size_t digits,
                           std::uint64_t bit_budget = kDefaultBitBudget);

/// eps^2 / (2(1-eps)) truncated to `digits` digits. Diagnostic only; the
/// exact predicate is verify(). Requires n >= 2.
ScaledDecimal k_ratio_digits(std::uint64_t n, std::size_t digits, const PrecisionLimits& limits = {});

/// Length of the leading run of 9s in the fractional expansion of sqrt(x),
/// found by doubling precision from 64 digits up to `cap`.
EpsilonProfile sqrt_nine_run(const Natural& x, std::size_t cap,
                             std::uint64_t bit_budget = kDefaultBitBudget);

/// Leading nines of eps for n.
EpsilonProfile nine_run(std::uint64_t n, std::size_t cap = kDefaultNineRunCap,
                        const PrecisionLimits& limits = {});

/// Leading nines of f(k) for k = floor(sqrt(n!)): the eps a solution at
/// this size would have to reach.
EpsilonProfile nine_run_of_required_epsilon(std::uint64_t n, std::size_t cap = kDefaultNineRunCap,
                                            const PrecisionLimits& limits = {});

/// True iff f(k) < f(k+1) < 1 at `digits` digits for every k in
/// [k_from, k_to). Requires 1 <= k_from < k_to and
/// digits >= 2 * decimal_length(k_to) + 2.
bool check_f_monotone(std::uint64_t k_from, std::uint64_t k_to, std::size_t digits);

}  // namespace brocard
