#include "brocard/poly_system.hpp"

#include "brocard/errors.hpp"
#include "brocard/factorial_engine.hpp"
#include "brocard/natural.hpp"

#include <stdexcept>

namespace brocard {

namespace {

Integer first_polynomial(const Integer& x, const Integer& y) {
  const Integer y2 = y * y;
  return y2 * y2 + 4 * y2 * y + 2 * x * y2 + 4 * y2 + 4 * x * y - 3 * x * x;
}

Integer second_polynomial(const Integer& x, const Integer& y) {
  const Integer y2 = y * y;
  return y2 * y + 3 * y2 + 2 * y - x * y - x;
}

}  // namespace

std::pair<Integer, Integer> eval_system(const LatticePoint& p) {
  return {first_polynomial(p.x, p.y), second_polynomial(p.x, p.y)};
}

std::vector<Integer> roots_in_x(const Integer& y) {
  // As a quadratic in x: -3x^2 + 2y(y+2) x + y^2 (y+2)^2 = 0.
  const Integer family = y * (y + 2);
  const Integer discriminant = 16 * family * family;
  if (mpz_perfect_square_p(discriminant.get_mpz_t()) == 0) {
    throw std::logic_error("roots_in_x: discriminant is not a perfect square");
  }

  std::vector<Integer> roots{family};
  if (mpz_divisible_ui_p(family.get_mpz_t(), 3) != 0) {
    Integer second = -family / 3;
    if (second != family) roots.push_back(std::move(second));
  }
  return roots;
}

std::vector<LatticePoint> solve_window(const Integer& y_min, const Integer& y_max,
                                       bool factorials_only) {
  if (y_min > y_max) throw DomainError("solve_window: y_min exceeds y_max");
  std::vector<LatticePoint> out;
  for (Integer y = y_min; y <= y_max; ++y) {
    for (Integer& x : roots_in_x(y)) {
      LatticePoint point{std::move(x), y};
      const auto [r1, r2] = eval_system(point);
      if (r1 != 0 || r2 != 0) continue;
      if (factorials_only &&
          (point.x < 1 || !is_factorial(Natural::from_mpz(point.x)).has_value())) {
        continue;
      }
      out.push_back(std::move(point));
    }
  }
  return out;
}

bool ferrari_identity_check(const Integer& y, const Integer& x) {
  const Integer base = y * y + 2 * y;
  const Integer square = base + x;
  const Integer difference = square * square - 4 * x * x;
  const Integer product = (base + 3 * x) * (base - x);
  return difference == product && product == first_polynomial(x, y);
}

}  // namespace brocard
