#include "hlpoly/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hlpoly/lp_geometry.hpp"
#include "hlpoly/scalar_opt.hpp"

namespace hlpoly {

namespace {

constexpr std::size_t kBranchSeedPoints = 8193;
constexpr double kBranchXtol = 1e-14;

void require_valid_p(double p, const char* who) {
  if (!(p > 2.0) || std::isinf(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be finite and > 2");
  }
}

void require_valid_q(double q, const char* who) {
  if (!(q >= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": q must be >= 1");
  }
}

void require_unit_interval(double a, const char* who) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": a must lie in [0, 1]");
  }
}

}  // namespace

double critical_exponent(double p) {
  require_valid_p(p, "critical_exponent");
  return p <= 4.0 ? p / (p - 2.0) : 4.0 * p / (3.0 * p - 4.0);
}

double diagonal_objective(double p, double q, double a) {
  require_valid_p(p, "diagonal_objective");
  require_valid_q(q, "diagonal_objective");
  require_unit_interval(a, "diagonal_objective");
  const double r = p / (p - 2.0);
  const double c = std::pow(p_complement(a, r), (p - 2.0) / p);
  return lq_norm3(a, c, 0.0, q);
}

double offdiag_objective(double p, double q, double a) {
  require_valid_p(p, "offdiag_objective");
  require_valid_q(q, "offdiag_objective");
  require_unit_interval(a, "offdiag_objective");
  const double u = p_complement(a, p);
  const double denom = a * a + std::pow(u, 2.0 / p);
  const double t1 = (2.0 * std::pow(a, p) - 1.0) / denom;
  const double t2 = 2.0 * a * std::pow(u, 1.0 / p) *
                    (std::pow(a, p - 2.0) + std::pow(u, (p - 2.0) / p)) / denom;
  return lq_norm3(t1, t2, t1, q);
}

double g_function(double p, double a) {
  const double v = offdiag_objective(p, 2.0, a);
  return v * v;
}

double g_derivative_root(double p, double tol) {
  require_valid_p(p, "g_derivative_root");
  if (!(p <= 4.0)) {
    throw std::invalid_argument("g_derivative_root: requires p <= 4");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("g_derivative_root: tol must be > 0");
  }
  // h = a^p (1-a^p)^{4/p} + a^{p+4} - a^4, grouped so the two a^4-scale
  // terms cancel exactly when p = 4 and h degenerates to zero.
  const auto factor = [p](double a) {
    const double u = std::pow(a, p);
    const double w = std::pow(a, 4.0);
    const double comp = u < 1.0 ? 1.0 - u : 0.0;
    return u * std::pow(comp, 4.0 / p) - w * comp;
  };
  constexpr int kProbes = 257;
  constexpr double kLo = 1e-3;
  constexpr double kHi = 1.0 - 1e-3;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool bracketed = false;
  double max_abs_h = 0.0;
  double prev_a = kLo;
  double prev_h = factor(prev_a);
  max_abs_h = std::fabs(prev_h);
  for (int i = 1; i < kProbes; ++i) {
    const double a = kLo + (kHi - kLo) * static_cast<double>(i) / (kProbes - 1);
    const double h = factor(a);
    max_abs_h = std::max(max_abs_h, std::fabs(h));
    if (!bracketed && prev_h > 0.0 && h <= 0.0) {
      bracket_lo = prev_a;
      bracket_hi = a;
      bracketed = true;
    }
    prev_a = a;
    prev_h = h;
  }
  double root = 0.0;
  if (bracketed) {
    root = bisect_sign_change(factor, bracket_lo, bracket_hi, tol);
  } else if (max_abs_h < 1e-12) {
    // p = 4: h vanishes identically. The deflated factor
    // (1/p) log(1-a^p) - log(a) keeps the sign change at a^p = 1/2.
    const auto deflated = [p](double a) {
      return std::log1p(-std::pow(a, p)) / p - std::log(a);
    };
    root = bisect_sign_change(deflated, 0.5, 1.0 - 1e-9, tol);
  } else {
    throw std::runtime_error("g_derivative_root: no sign change found");
  }
  // Secondary assertion: g has a local maximum at the root.
  constexpr double kDelta = 1e-5;
  const double g0 = g_function(p, root);
  const double slope_below = (g0 - g_function(p, root - kDelta)) / kDelta;
  const double slope_above = (g_function(p, root + kDelta) - g0) / kDelta;
  if (!(slope_below > -1e-6 && slope_above < 1e-6 &&
        std::fabs(slope_below) < 5e-3 && std::fabs(slope_above) < 5e-3)) {
    throw std::runtime_error(
        "g_derivative_root: finite-difference check failed at the root");
  }
  return root;
}

PositivityReport positivity_776_check(double p, std::size_t samples) {
  require_valid_p(p, "positivity_776_check");
  if (samples < 1000) {
    throw std::invalid_argument("positivity_776_check: samples must be >= 1000");
  }
  PositivityReport report;
  report.samples = samples;
  bool have_worst = false;
  for (std::size_t i = 1; i <= samples; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(samples + 1);
    const double u = std::pow(a, p);
    const double value =
        u * std::pow(p_complement(a, p), 2.0 / p) * (p - u * p + 2.0 * u - 1.0) -
        a * a * (u - 1.0) * (u * p - 2.0 * u + 1.0);
    if (!(value > 0.0)) ++report.violations;
    if (!have_worst || value < report.worst_value) {
      report.worst_value = value;
      report.worst_a = a;
      have_worst = true;
    }
  }
  report.ok = report.violations == 0;
  return report;
}

ConstantResult constant(double p, double q, ConstantMode mode) {
  require_valid_p(p, "constant");
  require_valid_q(q, "constant");
  const double a1 = std::pow(2.0, -1.0 / p);
  const double a0 = std::pow(2.0, (2.0 - p) / p);
  const std::array<double, 2> candidates{a0, a1};
  const ScalarMax diag = grid_refine_max(
      [p, q](double a) { return diagonal_objective(p, q, a); }, 0.0, 1.0,
      kBranchSeedPoints, kBranchXtol, candidates);
  if (mode == ConstantMode::Auto && p <= 4.0 && q >= 2.0) {
    const double value = std::pow(2.0, 2.0 / p);
    return {value, a1, offdiagonal_extreme(p, a1, 1), Method::ClosedForm,
            {diag.value, value}};
  }
  const ScalarMax off = grid_refine_max(
      [p, q](double a) { return offdiag_objective(p, q, a); }, 0.0, 1.0,
      kBranchSeedPoints, kBranchXtol, candidates);
  if (off.value >= diag.value) {
    return {off.value, off.x, offdiagonal_extreme(p, off.x, 1),
            Method::NumericMax, {diag.value, off.value}};
  }
  // The off-diagonal branch dominates for every (p, q); this path is kept
  // purely defensive so a regression surfaces as a wrong witness family.
  const double ax = std::clamp(diag.x, 1e-9, 1.0 - 1e-9);
  return {diag.value, diag.x, diagonal_extreme(p, ax), Method::NumericMax,
          {diag.value, off.value}};
}

}  // namespace hlpoly
