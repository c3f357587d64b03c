#pragma once

#include <cstddef>

#include "hlpoly/extremals.hpp"
#include "hlpoly/polynomial.hpp"

namespace hlpoly {

/// Smallest coefficient-norm exponent q with a dimension-free
/// Hardy-Littlewood constant for 2-homogeneous polynomials:
/// p/(p-2) for 2 < p <= 4, 4p/(3p-4) for p >= 4.
double critical_exponent(double p);

/// Coefficient l_q norm of the diagonal extreme polynomial with parameter a:
/// [a^q + (1 - a^{p/(p-2)})^{q(p-2)/p}]^{1/q}. Requires a in [0, 1].
double diagonal_objective(double p, double q, double a);

/// Coefficient l_q norm of the off-diagonal extreme polynomial with
/// parameter a: (2|T1|^q + T2^q)^{1/q} for the generator's coefficient pair
/// (T1, T2). Requires a in [0, 1]; the endpoints give 2^{1/q}.
double offdiag_objective(double p, double q, double a);

/// Square of offdiag_objective(p, 2, a). Equals 2 at a = 0 and a = 1, and
/// 2^{4/p} at its interior maximum a = 2^{-1/p}; constant at p = 4.
double g_function(double p, double a);

/// Zero in (0, 1) of the derivative factor
///   h(a) = a^p (1-a^p)^{4/p} + a^{p+4} - a^4
/// of g; equals 2^{-1/p}. Requires 2 < p <= 4. At p = 4 the factor vanishes
/// identically and the root is recovered from the deflated factor
/// (1/p) log(1-a^p) - log(a), whose zero is the same point. A
/// finite-difference check that g has a local maximum at the result runs as
/// a secondary assertion.
double g_derivative_root(double p, double tol = 1e-12);

struct PositivityReport {
  bool ok = false;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_a = 0.0;      // sample with the smallest margin
  double worst_value = 0.0;  // the margin at worst_a
};

/// Samples the strict positivity inequality
///   a^p (1-a^p)^{2/p} (p - a^p p + 2a^p - 1)
///     - a^2 (a^p - 1) (a^p p - 2a^p + 1) > 0
/// on an interior grid of (0, 1); it rules out further critical points of g.
/// Requires p > 2 and samples >= 1000.
PositivityReport positivity_776_check(double p, std::size_t samples);

enum class Method { ClosedForm, NumericMax };
enum class ConstantMode { Auto, ForceNumeric };

struct BranchValues {
  double diagonal = 0.0;
  double offdiagonal = 0.0;
};

struct ConstantResult {
  double value = 0.0;
  double argmax_a = 0.0;
  ExtremePoly witness;
  Method method = Method::NumericMax;
  BranchValues family_values;
};

/// Optimal Hardy-Littlewood constant C(p, q) for 2-homogeneous polynomials
/// on l_p(R^2): the closed form 2^{2/p} when 2 < p <= 4 and q >= 2 (Auto
/// mode), otherwise a two-branch maximization of the family objectives over
/// a in [0, 1] with an 8193-point seed grid, golden refinement, and the
/// known maximizers 2^{-1/p}, 2^{(2-p)/p} injected as candidates. The
/// witness attains value as its coeff_norm(q) / sup_norm(p) ratio.
ConstantResult constant(double p, double q, ConstantMode mode = ConstantMode::Auto);

}  // namespace hlpoly
