#include "hlpoly/scan.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlpoly/constants.hpp"
#include "hlpoly/scalar_opt.hpp"

namespace hlpoly {

ScanReport build_scan(double p, double q, std::size_t n_points) {
  if (!(p > 2.0)) {
    throw std::invalid_argument("build_scan: p must be > 2");
  }
  if (!(q >= 1.0)) {
    throw std::invalid_argument("build_scan: q must be >= 1");
  }
  if (n_points < 2) {
    throw std::invalid_argument("build_scan: n_points must be >= 2");
  }
  ScanReport report;
  report.p = p;
  report.q = q;
  report.points.reserve(n_points);
  const double step = 1.0 / static_cast<double>(n_points - 1);
  std::size_t best_idx = 0;
  Family best_branch = Family::OffDiagonal;
  double best_value = -1.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    const double a = (i + 1 == n_points) ? 1.0 : static_cast<double>(i) * step;
    const ScanPoint pt{a, diagonal_objective(p, q, a), offdiag_objective(p, q, a)};
    report.points.push_back(pt);
    // Ties go to the off-diagonal branch, which is the binding one.
    if (pt.offdiagonal >= best_value) {
      best_value = pt.offdiagonal;
      best_branch = Family::OffDiagonal;
      best_idx = i;
    }
    if (pt.diagonal > best_value) {
      best_value = pt.diagonal;
      best_branch = Family::Diagonal;
      best_idx = i;
    }
  }
  const auto objective = [p, q, best_branch](double a) {
    return best_branch == Family::Diagonal ? diagonal_objective(p, q, a)
                                           : offdiag_objective(p, q, a);
  };
  const double lo = report.points[best_idx > 0 ? best_idx - 1 : 0].a;
  const double hi =
      report.points[std::min(best_idx + 1, n_points - 1)].a;
  const ScalarMax refined = golden_section_max(objective, lo, hi, 1e-14);
  report.argmax.branch = best_branch;
  if (refined.value >= best_value) {
    report.argmax.a = refined.x;
    report.argmax.value = refined.value;
  } else {
    report.argmax.a = report.points[best_idx].a;
    report.argmax.value = best_value;
  }
  return report;
}

}  // namespace hlpoly
