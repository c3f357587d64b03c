#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hlpoly {

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section maximization of f on [lo, hi]. Derivative-free, so folds
/// from |.| and one-sided fractional powers at the interval ends are fine.
/// Returns the best probe seen, never worse than either endpoint.
template <typename F>
ScalarMax golden_section_max(F&& f, double lo, double hi, double xtol) {
  if (hi < lo) std::swap(lo, hi);
  constexpr double kInvPhi = 0.6180339887498948482;
  ScalarMax best{lo, f(lo)};
  const double fhi = f(hi);
  if (fhi > best.value) best = {hi, fhi};
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  for (int iter = 0; iter < 200 && (b - a) > xtol; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      if (fc > best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      if (fd > best.value) best = {d, fd};
    }
  }
  return best;
}

/// Seed-grid maximization: evaluate f on seed_points equispaced points of
/// [lo, hi], golden-refine every bracket around a grid local maximum, and
/// fold in the extra candidate abscissae as plain evaluations. The candidates
/// guarantee a floor at analytically known maximizers.
template <typename F>
ScalarMax grid_refine_max(F&& f, double lo, double hi, std::size_t seed_points,
                          double xtol,
                          std::span<const double> extra_candidates = {}) {
  if (seed_points < 3) {
    throw std::invalid_argument("grid_refine_max: seed_points must be >= 3");
  }
  const std::size_t n = seed_points;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> xs(n);
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = (i + 1 == n) ? hi : lo + static_cast<double>(i) * step;
    vals[i] = f(xs[i]);
  }
  ScalarMax best{xs[0], vals[0]};
  for (std::size_t i = 1; i < n; ++i) {
    if (vals[i] > best.value) best = {xs[i], vals[i]};
  }
  auto refine = [&](std::size_t a_idx, std::size_t b_idx) {
    const ScalarMax r = golden_section_max(f, xs[a_idx], xs[b_idx], xtol);
    if (r.value > best.value) best = r;
  };
  if (vals[0] > vals[1]) refine(0, 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool local_max = vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1] &&
                           (vals[i] > vals[i - 1] || vals[i] > vals[i + 1]);
    if (local_max) refine(i - 1, i + 1);
  }
  if (vals[n - 1] > vals[n - 2]) refine(n - 2, n - 1);
  for (const double cand : extra_candidates) {
    const double x = std::clamp(cand, lo, hi);
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

/// Bisection for a root of h on [lo, hi]; requires h(lo) and h(hi) to have
/// strictly opposite signs. Returns the midpoint of the final bracket.
template <typename F>
double bisect_sign_change(F&& h, double lo, double hi, double xtol) {
  double flo = h(lo);
  const double fhi = h(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect_sign_change: endpoints have equal sign");
  }
  for (int iter = 0; iter < 400 && (hi - lo) > xtol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = h(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace hlpoly
