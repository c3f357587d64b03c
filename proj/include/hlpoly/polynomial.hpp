#pragma once

#include <limits>

namespace hlpoly {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Real 2-homogeneous polynomial on R^2 in the monomial basis:
///   P(x, y) = c20*x^2 + c11*x*y + c02*y^2.
struct QuadForm {
  double c20 = 0.0;
  double c11 = 0.0;
  double c02 = 0.0;
};

/// Value of P at (x, y).
double evaluate(const QuadForm& P, double x, double y);

/// l_q norm of the coefficient triple (c20, c11, c02).
/// Requires q >= 1; q = kInfinity gives the max norm.
double coeff_norm(const QuadForm& P, double q);

/// l_q norm of an arbitrary triple; shared by coeff_norm and the branch
/// objectives. Scales by the largest entry so powers stay in [0, 1].
double lq_norm3(double u, double v, double w, double q);

}  // namespace hlpoly
