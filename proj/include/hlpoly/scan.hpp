#pragma once

#include <cstddef>
#include <vector>

#include "hlpoly/extremals.hpp"

namespace hlpoly {

struct ScanPoint {
  double a = 0.0;
  double diagonal = 0.0;
  double offdiagonal = 0.0;
};

struct ScanArgmax {
  Family branch = Family::OffDiagonal;
  double a = 0.0;
  double value = 0.0;
};

/// Both branch objectives sampled on n_points equispaced a-values covering
/// [0, 1], plus the refined global argmax over the two branches.
struct ScanReport {
  double p = 0.0;
  double q = 0.0;
  std::vector<ScanPoint> points;
  ScanArgmax argmax;
};

/// Requires p > 2, q >= 1, n_points >= 2. Deterministic: equal inputs give
/// identical reports.
ScanReport build_scan(double p, double q, std::size_t n_points);

}  // namespace hlpoly
