#include "hlpoly/extremals.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hlpoly/lp_geometry.hpp"

namespace hlpoly {

namespace {

void require_valid_p(double p, const char* who) {
  if (!(p > 2.0) || std::isinf(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be finite and > 2");
  }
}

void require_sign(int sign, const char* who) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument(std::string(who) + ": sign must be +1 or -1");
  }
}

}  // namespace

ExtremePoly diagonal_extreme(double p, double a) {
  require_valid_p(p, "diagonal_extreme");
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("diagonal_extreme: a must lie in (0, 1)");
  }
  const double r = p / (p - 2.0);
  const double c = std::pow(p_complement(a, r), (p - 2.0) / p);
  return {Family::Diagonal, a, 1, {a, 0.0, c}};
}

ExtremePoly offdiag_from_pair(double p, double a, double b, int sign) {
  require_valid_p(p, "offdiag_from_pair");
  require_sign(sign, "offdiag_from_pair");
  if (!(a >= 0.0) || !(b >= 0.0) || (a == 0.0 && b == 0.0)) {
    throw std::invalid_argument("offdiag_from_pair: need a, b >= 0, not both 0");
  }
  const double s = static_cast<double>(sign);
  const double denom = a * a + b * b;
  const double t1 = (std::pow(a, p) - std::pow(b, p)) / denom;
  const double t2 =
      2.0 * a * b * (std::pow(a, p - 2.0) + std::pow(b, p - 2.0)) / denom;
  return {Family::OffDiagonal, a, sign, {s * t1, s * t2, -s * t1}};
}

ExtremePoly offdiagonal_extreme(double p, double a, int sign) {
  require_valid_p(p, "offdiagonal_extreme");
  require_sign(sign, "offdiagonal_extreme");
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("offdiagonal_extreme: a must lie in [0, 1]");
  }
  const double b = std::pow(p_complement(a, p), 1.0 / p);
  return offdiag_from_pair(p, a, b, sign);
}

ExtremeValidation validate_extreme(const ExtremePoly& E, double p) {
  require_valid_p(p, "validate_extreme");
  ExtremeValidation result;
  result.measured_sup_norm = sup_norm(E.poly, p);
  std::ostringstream detail;
  if (std::fabs(result.measured_sup_norm - 1.0) > 1e-8) {
    detail << "sup norm is " << result.measured_sup_norm << ", expected 1; ";
  }
  if (E.family == Family::Diagonal) {
    if (E.poly.c11 != 0.0) {
      detail << "diagonal family requires c11 = 0; ";
    }
    if (!(E.poly.c20 * E.poly.c02 > 0.0)) {
      detail << "diagonal family requires c20*c02 > 0; ";
    }
    const double r = p / (p - 2.0);
    const double rnorm = std::pow(
        std::pow(std::fabs(E.poly.c20), r) + std::pow(std::fabs(E.poly.c02), r),
        1.0 / r);
    if (std::fabs(rnorm - 1.0) > 1e-12) {
      detail << "coefficient l_{p/(p-2)} norm is " << rnorm << ", expected 1; ";
    }
  } else {
    if (E.sign != 1 && E.sign != -1) {
      detail << "off-diagonal sign must be +1 or -1; ";
    }
    if (!(E.param_a >= 0.0 && E.param_a <= 1.0)) {
      detail << "off-diagonal param_a must lie in [0, 1]; ";
    } else if (E.sign == 1 || E.sign == -1) {
      const QuadForm ref = offdiagonal_extreme(p, E.param_a, E.sign).poly;
      if (std::fabs(E.poly.c20 - ref.c20) > 1e-12 ||
          std::fabs(E.poly.c11 - ref.c11) > 1e-12 ||
          std::fabs(E.poly.c02 - ref.c02) > 1e-12) {
        detail << "coefficients do not match the generator at param_a; ";
      }
    }
  }
  result.detail = detail.str();
  result.ok = result.detail.empty();
  return result;
}

}  // namespace hlpoly
