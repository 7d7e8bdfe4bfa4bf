#pragma once

#include "brocard/factorial_engine.hpp"
#include "brocard/natural.hpp"

#include <cstdint>
#include <optional>

namespace brocard {

/// Every solution criterion for n!+1 = m^2, evaluated exactly.
///
/// k is floor(sqrt(n!)); the only possible m is k+1. The report's fields
/// are mutually consistent:
///   is_solution <=> product_matches <=> defect == 2k <=> n!+1 == (k+1)^2
/// and is_solution implies k is even.
struct VerifyReport {
  std::uint64_t n = 0;
  Natural factorial;     // n!
  Natural k;             // floor(sqrt(n!))
  Natural m_candidate;   // k + 1
  bool k_even = false;
  Natural k_product;     // k * (k + 2)
  bool product_matches = false;
  Natural defect;        // n! - k^2, the natural number eps*(2k + eps)
  bool is_solution = false;
  std::optional<Natural> m;
};

/// n! = (2a) * (2^(e-1) b) for a solution n, with a and b odd, e the 2-adic
/// valuation of n!, and the two factors differing by exactly 2.
struct FactorStructure {
  Natural a;
  Natural b;
  std::size_t e = 0;
  Natural half_even;  // 2a, the factor congruent to 2 mod 4
  Natural half_pow;   // 2^(e-1) * b
};

struct BoundCheck {
  bool holds = false;   // n! <= k(k+2)
  bool strict = false;  // n! <  k(k+2)
};

Natural candidate_m(std::uint64_t n, std::uint64_t ceiling = kDefaultExactCeiling);

Natural defect(std::uint64_t n, std::uint64_t ceiling = kDefaultExactCeiling);

VerifyReport verify(std::uint64_t n, std::uint64_t ceiling = kDefaultExactCeiling);

/// Same as verify(n) but reuses an already computed n!.
VerifyReport verify_with_factorial(std::uint64_t n, Natural factorial);

/// n! <= k(k+2), strict exactly when n is not a solution. Throws
/// std::logic_error if the strictness clause is ever contradicted.
BoundCheck bound_check(std::uint64_t n, std::uint64_t ceiling = kDefaultExactCeiling);

/// Decomposes a solution's n! = (m-1)(m+1). Throws NotASolutionError when n
/// is not a solution.
FactorStructure factor_structure(std::uint64_t n, std::uint64_t ceiling = kDefaultExactCeiling);

}  // namespace brocard
