#include "hlpoly/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "hlpoly/constants.hpp"
#include "hlpoly/lp_geometry.hpp"

namespace hlpoly {

namespace {

constexpr double kSkipThreshold = 1e-12;
constexpr double kPerturbSigma = 0.01;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Minimal deterministic generator with explicit bit-to-double mapping, so
/// seeded reports are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  double next_unit() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_symmetric() {  // [-1, 1)
    return 2.0 * next_unit() - 1.0;
  }

  double next_gauss() {  // Box-Muller, one value per call
    double u1 = next_unit();
    while (u1 == 0.0) u1 = next_unit();
    const double u2 = next_unit();
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  std::uint64_t state_;
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ (trial * 0xd1b54a32d192ed03ull));
}

}  // namespace

QuadForm random_quadform(std::uint64_t seed, double scale) {
  if (!(scale > 0.0) || std::isinf(scale)) {
    throw std::invalid_argument("random_quadform: scale must be finite and > 0");
  }
  Rng rng(seed);
  const double u1 = rng.next_symmetric();
  const double u2 = rng.next_symmetric();
  const double u3 = rng.next_symmetric();
  return {scale * u1, scale * u2, scale * u3};
}

VerificationReport check_hl_inequality(double p, double q, std::size_t trials,
                                       std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("check_hl_inequality: trials must be >= 1");
  }
  const ConstantResult cres = constant(p, q, ConstantMode::Auto);
  const QuadForm& witness = cres.witness.poly;
  VerificationReport report;
  report.seed = seed;
  report.trials = trials;
  report.constant_used = cres.value;
  bool have_max = false;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, i));
    QuadForm P;
    if (i % 10 == 0) {
      P = {witness.c20 + kPerturbSigma * rng.next_gauss(),
           witness.c11 + kPerturbSigma * rng.next_gauss(),
           witness.c02 + kPerturbSigma * rng.next_gauss()};
    } else {
      P = {rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
    }
    const double sn = sup_norm(P, p);
    if (sn < kSkipThreshold) {
      ++report.skipped;
      continue;
    }
    const double ratio = coeff_norm(P, q) / sn;
    if (!have_max || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.max_trial = i;
      report.worst_case = P;
      have_max = true;
    }
  }
  report.pass = report.max_ratio <= cres.value * (1.0 + 1e-9);
  return report;
}

SharpnessReport check_sharpness(double p, double q) {
  const ConstantResult cres = constant(p, q, ConstantMode::Auto);
  SharpnessReport report;
  report.constant_value = cres.value;
  report.ratio = coeff_norm(cres.witness.poly, q) / sup_norm(cres.witness.poly, p);
  report.ok = std::fabs(report.ratio - report.constant_value) <= 1e-8;
  return report;
}

}  // namespace hlpoly
