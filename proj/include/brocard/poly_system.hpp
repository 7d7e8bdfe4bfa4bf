#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace brocard {

/// Signed arbitrary-precision integer; the polynomial system has a
/// negative-y solution family, so naturals are not enough here.
using Integer = mpz_class;

/// (x, y) with x standing for n! and y for floor(sqrt(n!)).
struct LatticePoint {
  Integer x;
  Integer y;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Residuals of
///   P(x, y) = y^4 + 4y^3 + 2xy^2 + 4y^2 + 4xy - 3x^2
///   Q(x, y) = y^3 + 3y^2 + 2y - xy - x
std::pair<Integer, Integer> eval_system(const LatticePoint& p);

/// Integer roots in x of P(x, y) = 0 for fixed y. P factors as
/// -(x - y(y+2)) (3x + y(y+2)), so the roots are y(y+2) and, when it is an
/// integer, -y(y+2)/3. Distinct roots only, y(y+2) first.
std::vector<Integer> roots_in_x(const Integer& y);

/// All integer points with y_min <= y <= y_max on which both P and Q
/// vanish, in increasing y. With factorials_only, keeps points whose x >= 1
/// is a factorial.
std::vector<LatticePoint> solve_window(const Integer& y_min, const Integer& y_max,
                                       bool factorials_only);

/// Checks, at (x, y), the completed-square identity
///   (y^2 + 2y + x)^2 - (2x)^2 = (y^2 + 2y + 3x)(y^2 + 2y - x) = P(x, y).
bool ferrari_identity_check(const Integer& y, const Integer& x);

}  // namespace brocard
