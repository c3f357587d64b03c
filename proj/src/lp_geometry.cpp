#include "hlpoly/lp_geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "hlpoly/scalar_opt.hpp"

namespace hlpoly {

namespace {

constexpr std::size_t kSeedPoints = 4097;
constexpr double kRefineXtol = 1e-14;

// Refinement tolerance for the bracket touching a = 1, where |P| can keep a
// slope ~ delta^(1/p - 1); one ulp of resolution costs ~60 golden steps.
constexpr double kPoleXtol = 2.5e-16;

// Boundary-layer tail: a = 1 - delta with delta descending geometrically from
// kTailHi to the last representable gap below 1.
constexpr double kTailHi = 1e-2;
constexpr double kTailRatio = 1.01;
constexpr double kTailFloor = 2.25e-16;

void require_valid_p(double p, const char* who) {
  if (!(p > 2.0) || std::isinf(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be finite and > 2");
  }
}

/// Small per-thread pool of sphere grids keyed by (p, n). Grids are reused
/// across calls; the oldest entry is dropped once the pool is full.
const SphereGrid& cached_grid(double p, std::size_t n) {
  struct Entry {
    std::uint64_t p_bits;
    std::size_t n;
    std::unique_ptr<SphereGrid> grid;
  };
  thread_local std::vector<Entry> pool;
  const std::uint64_t p_bits = std::bit_cast<std::uint64_t>(p);
  for (const Entry& e : pool) {
    if (e.p_bits == p_bits && e.n == n) return *e.grid;
  }
  if (pool.size() >= 6) pool.erase(pool.begin());
  pool.push_back({p_bits, n, std::make_unique<SphereGrid>(p, n)});
  return *pool.back().grid;
}

}  // namespace

std::pair<double, double> sphere_point(double p, double a, int sign_y) {
  require_valid_p(p, "sphere_point");
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("sphere_point: a must lie in [0, 1]");
  }
  if (sign_y != 1 && sign_y != -1) {
    throw std::invalid_argument("sphere_point: sign_y must be +1 or -1");
  }
  const double b = std::pow(p_complement(a, p), 1.0 / p);
  return {a, sign_y > 0 ? b : -b};
}

SphereGrid::SphereGrid(double p, std::size_t n) : p_(p) {
  require_valid_p(p, "SphereGrid");
  if (n < 2) {
    throw std::invalid_argument("SphereGrid: need at least 2 grid points");
  }
  step_ = 1.0 / static_cast<double>(n - 1);
  xx_.resize(n);
  xy_.resize(n);
  yy_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = a_at(i);
    const double b = std::pow(p_complement(a, p), 1.0 / p);
    xx_[i] = a * a;
    xy_[i] = a * b;
    yy_[i] = b * b;
  }
  txx_.reserve(3200);
  txy_.reserve(3200);
  tyy_.reserve(3200);
  double prev_a = -1.0;
  for (double d = kTailHi; d > kTailFloor; d /= kTailRatio) {
    const double a = 1.0 - d;
    if (a == prev_a || a >= 1.0) continue;
    prev_a = a;
    // 1 - a^p via expm1/log1p keeps full relative precision in the layer.
    const double u = -std::expm1(p * std::log1p(a - 1.0));
    const double b = std::pow(u, 1.0 / p);
    txx_.push_back(a * a);
    txy_.push_back(a * b);
    tyy_.push_back(b * b);
  }
}

double SphereGrid::max_abs(const QuadForm& P) const {
  const double c20 = P.c20;
  const double c11 = P.c11;
  const double c02 = P.c02;
  double best = 0.0;
  const std::size_t n = xx_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double v =
        std::fabs(c20 * xx_[i] + c02 * yy_[i]) + std::fabs(c11 * xy_[i]);
    if (v > best) best = v;
  }
  return best;
}

double SphereGrid::max_abs_boundary_tail(const QuadForm& P) const {
  const double c20 = P.c20;
  const double c11 = P.c11;
  const double c02 = P.c02;
  double best = 0.0;
  const std::size_t n = txx_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double v =
        std::fabs(c20 * txx_[i] + c02 * tyy_[i]) + std::fabs(c11 * txy_[i]);
    if (v > best) best = v;
  }
  return best;
}

double sup_norm(const QuadForm& P, double p, double tol) {
  require_valid_p(p, "sup_norm");
  if (!(tol > 0.0)) {
    throw std::invalid_argument("sup_norm: tol must be > 0");
  }
  const SphereGrid& grid = cached_grid(p, kSeedPoints);
  const auto f = [&P, p](double a) {
    const double u = p_complement(a, p);
    const double e1 = P.c20 * a * a + P.c02 * std::pow(u, 2.0 / p);
    const double e2 = P.c11 * a * std::pow(u, 1.0 / p);
    return std::fabs(e1) + std::fabs(e2);
  };
  const std::size_t n = grid.size();
  double v0 = grid.value_at(P, 0);
  double v1 = grid.value_at(P, 1);
  double best = std::max(v0, v1);
  const double xtol = std::min(tol, kRefineXtol);
  if (v0 > v1) {
    best = std::max(best, golden_section_max(f, grid.a_at(0), grid.a_at(1), xtol).value);
  }
  for (std::size_t i = 2; i < n; ++i) {
    const double v2 = grid.value_at(P, i);
    if (v2 > best) best = v2;
    const bool local_max = v1 >= v0 && v1 >= v2 && (v1 > v0 || v1 > v2);
    if (local_max) {
      best = std::max(best,
                      golden_section_max(f, grid.a_at(i - 2), grid.a_at(i), xtol).value);
    }
    v0 = v1;
    v1 = v2;
  }
  if (v1 > v0) {
    best = std::max(best,
                    golden_section_max(f, grid.a_at(n - 2), grid.a_at(n - 1),
                                       std::min(xtol, kPoleXtol))
                        .value);
  }
  return best;
}

double sup_norm_oracle(const QuadForm& P, double p, std::size_t grid_size) {
  require_valid_p(p, "sup_norm_oracle");
  if (grid_size < 1000) {
    throw std::invalid_argument("sup_norm_oracle: grid_size must be >= 1000");
  }
  const SphereGrid& grid = cached_grid(p, grid_size);
  return std::max(grid.max_abs(P), grid.max_abs_boundary_tail(P));
}

}  // namespace hlpoly
