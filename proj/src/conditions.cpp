#include "brocard/conditions.hpp"

#include "brocard/errors.hpp"
#include "brocard/exact_arith.hpp"

#include <stdexcept>
#include <string>

namespace brocard {

Natural candidate_m(std::uint64_t n, std::uint64_t ceiling) {
  return isqrt(factorial_exact(n, ceiling)) + Natural(1);
}

Natural defect(std::uint64_t n, std::uint64_t ceiling) {
  return root_defect(factorial_exact(n, ceiling), 2);
}

VerifyReport verify_with_factorial(std::uint64_t n, Natural factorial) {
  VerifyReport r;
  r.n = n;
  r.k = isqrt(factorial);
  r.m_candidate = r.k + Natural(1);
  r.k_even = !r.k.is_odd();
  r.k_product = r.k * (r.k + Natural(2));
  r.product_matches = r.k_product == factorial;
  r.defect = factorial - r.k * r.k;
  r.is_solution = r.defect == r.k * Natural(2);
  r.factorial = std::move(factorial);

  if (r.is_solution != r.product_matches) {
    throw std::logic_error("verify: defect and product criteria disagree at n=" +
                           std::to_string(n));
  }
  if (r.is_solution) r.m = r.m_candidate;
  return r;
}

VerifyReport verify(std::uint64_t n, std::uint64_t ceiling) {
  return verify_with_factorial(n, factorial_exact(n, ceiling));
}

BoundCheck bound_check(std::uint64_t n, std::uint64_t ceiling) {
  const VerifyReport r = verify(n, ceiling);
  BoundCheck out;
  out.holds = r.factorial <= r.k_product;
  out.strict = r.factorial < r.k_product;
  if (out.holds && out.strict == r.is_solution) {
    throw std::logic_error("bound_check: strictness contradicts the solution verdict at n=" +
                           std::to_string(n));
  }
  return out;
}

FactorStructure factor_structure(std::uint64_t n, std::uint64_t ceiling) {
  const VerifyReport r = verify(n, ceiling);
  if (!r.is_solution) {
    throw NotASolutionError("factor_structure: n=" + std::to_string(n) + " is not a solution");
  }
  // n! = (m-1)(m+1) = k(k+2); both factors are even and exactly one of
  // them is 2 mod 4.
  Natural lo = r.k;
  Natural hi = r.k + Natural(2);
  FactorStructure fs;
  fs.e = r.factorial.two_adic_valuation();
  if (lo.two_adic_valuation() == 1) {
    fs.half_even = std::move(lo);
    fs.half_pow = std::move(hi);
  } else {
    fs.half_even = std::move(hi);
    fs.half_pow = std::move(lo);
  }
  fs.a = fs.half_even >> 1;
  fs.b = fs.half_pow >> (fs.e - 1);
  return fs;
}

}  // namespace brocard
