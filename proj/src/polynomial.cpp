#include "hlpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hlpoly {

double evaluate(const QuadForm& P, double x, double y) {
  return P.c20 * x * x + P.c11 * x * y + P.c02 * y * y;
}

double lq_norm3(double u, double v, double w, double q) {
  if (!(q >= 1.0)) {
    throw std::invalid_argument("lq_norm3: q must be >= 1");
  }
  u = std::fabs(u);
  v = std::fabs(v);
  w = std::fabs(w);
  const double m = std::max({u, v, w});
  if (m == 0.0 || std::isinf(q)) {
    return m;
  }
  const double s =
      std::pow(u / m, q) + std::pow(v / m, q) + std::pow(w / m, q);
  return m * std::pow(s, 1.0 / q);
}

double coeff_norm(const QuadForm& P, double q) {
  return lq_norm3(P.c20, P.c11, P.c02, q);
}

}  // namespace hlpoly
