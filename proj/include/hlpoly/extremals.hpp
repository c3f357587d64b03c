#pragma once

#include <string>

#include "hlpoly/polynomial.hpp"

namespace hlpoly {

enum class Family { Diagonal, OffDiagonal };

/// Extreme point of the unit ball of 2-homogeneous polynomials on l_p(R^2),
/// tagged with its generating family and parameters.
struct ExtremePoly {
  Family family = Family::Diagonal;
  double param_a = 0.0;
  int sign = 1;  // meaningful for the off-diagonal family only
  QuadForm poly;
};

/// Diagonal family a*x^2 + c*y^2 with a, c > 0 and unit l_{p/(p-2)} norm of
/// (a, c): c = (1 - a^{p/(p-2)})^{(p-2)/p}. Requires p > 2 and a in (0, 1).
ExtremePoly diagonal_extreme(double p, double a);

/// Off-diagonal family through the sphere point (a, b), b = (1 - a^p)^{1/p}:
///   sign * [ (a^p - b^p)/(a^2 + b^2) * (x^2 - y^2)
///            + 2ab(a^{p-2} + b^{p-2})/(a^2 + b^2) * xy ].
/// Requires p > 2, a in [0, 1], sign in {+1, -1}.
ExtremePoly offdiagonal_extreme(double p, double a, int sign);

/// Same generator with both sphere coordinates given explicitly; swapping
/// a and b negates the x^2 - y^2 part and fixes the xy part, bitwise.
ExtremePoly offdiag_from_pair(double p, double a, double b, int sign);

struct ExtremeValidation {
  bool ok = false;
  double measured_sup_norm = 0.0;
  std::string detail;  // empty when ok
};

/// Checks the family structure of E and that sup_norm(E.poly, p) is 1 within
/// 1e-8; the measured norm is reported either way.
ExtremeValidation validate_extreme(const ExtremePoly& E, double p);

}  // namespace hlpoly
