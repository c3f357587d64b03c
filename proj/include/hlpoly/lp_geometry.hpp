#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "hlpoly/polynomial.hpp"

namespace hlpoly {

/// 1 - a^p clamped into [0, 1]; the clamp absorbs rounding at a = 1.
inline double p_complement(double a, double p) {
  const double u = 1.0 - std::pow(a, p);
  return u < 0.0 ? 0.0 : (u > 1.0 ? 1.0 : u);
}

/// Point (a, sign_y * (1 - a^p)^(1/p)) on the unit sphere of l_p(R^2).
/// Requires p > 2, a in [0, 1], sign_y in {+1, -1}.
std::pair<double, double> sphere_point(double p, double a, int sign_y);

/// Monomial values x^2, x*y, y^2 precomputed along the first-quadrant arc
/// {(a, (1-a^p)^(1/p)) : a in [0, 1]} of the l_p unit sphere, on an
/// equispaced a-grid including both endpoints. Quadratic forms evaluate with
/// three multiplies per point, and both y-signs fold into one pass via
/// max(|e1+e2|, |e1-e2|) = |e1| + |e2|.
///
/// The arc parametrization has a power cusp at a = 1 (the y coordinate
/// behaves like (p*(1-a))^{1/p}), so |P| can peak inside a boundary layer
/// narrower than any practical equispaced cell. A fixed geometric tail of
/// samples a = 1 - delta, delta descending from 1e-2 to the machine floor by
/// a 1.01 ratio, is precomputed alongside the main grid to cover that layer.
class SphereGrid {
 public:
  SphereGrid(double p, std::size_t n);

  double p() const { return p_; }
  std::size_t size() const { return xx_.size(); }
  double a_at(std::size_t i) const {
    return (i + 1 == xx_.size()) ? 1.0 : static_cast<double>(i) * step_;
  }

  /// max over both y-signs of |P(a_i, +/-b_i)|.
  double value_at(const QuadForm& P, std::size_t i) const {
    return std::fabs(P.c20 * xx_[i] + P.c02 * yy_[i]) +
           std::fabs(P.c11 * xy_[i]);
  }

  /// max over all equispaced grid points and both y-signs of |P|.
  double max_abs(const QuadForm& P) const;

  /// max of |P| over the geometric boundary-layer samples near a = 1.
  double max_abs_boundary_tail(const QuadForm& P) const;

 private:
  double p_;
  double step_;
  std::vector<double> xx_, xy_, yy_;     // equispaced samples
  std::vector<double> txx_, txy_, tyy_;  // boundary-layer tail
};

/// Supremum of |P| over the unit sphere of l_p(R^2), p > 2. Seeds with a
/// 4097-point sphere grid, then golden-refines every bracket around a grid
/// local maximum; evenness of P reduces the search to the first-quadrant arc
/// with both y-signs.
double sup_norm(const QuadForm& P, double p, double tol = 1e-10);

/// Brute-force referee: max of |P| over grid_size equispaced a-values in
/// [0, 1] (both y-signs), plus the grid's geometric boundary-layer tail near
/// a = 1, where equispaced sampling cannot resolve the parametrization's
/// power cusp. Requires grid_size >= 1000. Pure sampling; deliberately shares
/// no search logic with sup_norm.
double sup_norm_oracle(const QuadForm& P, double p, std::size_t grid_size);

}  // namespace hlpoly
