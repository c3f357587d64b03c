#pragma once

#include <cstddef>
#include <cstdint>

#include "hlpoly/polynomial.hpp"

namespace hlpoly {

/// Deterministic random quadratic form: three coefficients uniform on
/// [-scale, scale), derived from seed alone. The same seed with scale s
/// yields exactly s times the scale-1 draw when s is a power of two, and
/// the same direction otherwise.
QuadForm random_quadform(std::uint64_t seed, double scale);

struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t skipped = 0;  // near-zero draws excluded from the ratio
  double max_ratio = 0.0;
  std::size_t max_trial = 0;  // first trial attaining max_ratio
  QuadForm worst_case;
  double constant_used = 0.0;
  bool pass = false;
};

/// Samples random quadratic forms, enriched every 10th trial with a Gaussian
/// perturbation (sigma = 0.01) of the sharpness witness, and checks
/// coeff_norm(P, q) <= C(p, q) * sup_norm(P, p) on every draw. Draws with
/// sup norm below 1e-12 are skipped. pass allows 1e-9 relative slack.
VerificationReport check_hl_inequality(double p, double q, std::size_t trials,
                                       std::uint64_t seed);

struct SharpnessReport {
  bool ok = false;
  double ratio = 0.0;
  double constant_value = 0.0;
};

/// Evaluates the witness ratio coeff_norm(W, q) / sup_norm(W, p) for the
/// witness of constant(p, q) and compares it with the constant (1e-8).
SharpnessReport check_sharpness(double p, double q);

}  // namespace hlpoly
