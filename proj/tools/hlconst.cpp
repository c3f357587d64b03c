#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlpoly/constants.hpp"
#include "hlpoly/extremals.hpp"
#include "hlpoly/lp_geometry.hpp"
#include "hlpoly/polynomial.hpp"
#include "hlpoly/scan.hpp"
#include "hlpoly/verify.hpp"

namespace {

using nlohmann::json;

/// Shortest decimal digits that round-trip; used for CSV cells.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Significant-digit formatting for human-readable output.
std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

const char* method_name(hlpoly::Method m) {
  return m == hlpoly::Method::ClosedForm ? "ClosedForm" : "NumericMax";
}

const char* family_name(hlpoly::Family f) {
  return f == hlpoly::Family::Diagonal ? "Diagonal" : "OffDiagonal";
}

void print_exploratory_note(double p) {
  if (p > 4.0) {
    std::fprintf(stderr,
                 "note: p > 4 is exploratory; no closed form is proven and "
                 "values are numeric maxima over the known extreme families\n");
  }
}

json witness_json(const hlpoly::ExtremePoly& w) {
  return json{{"family", family_name(w.family)},
              {"param_a", w.param_a},
              {"sign", w.sign},
              {"c20", w.poly.c20},
              {"c11", w.poly.c11},
              {"c02", w.poly.c02}};
}

struct ConstantArgs {
  double p = 0.0;
  std::optional<double> q;
  bool numeric = false;
  bool as_json = false;
  int digits = 10;
};

int run_constant(const ConstantArgs& args) {
  const double q = args.q ? *args.q : hlpoly::critical_exponent(args.p);
  const auto mode = args.numeric ? hlpoly::ConstantMode::ForceNumeric
                                 : hlpoly::ConstantMode::Auto;
  const hlpoly::ConstantResult res = hlpoly::constant(args.p, q, mode);
  print_exploratory_note(args.p);
  if (args.as_json) {
    const json j{{"p", args.p},
                 {"q", q},
                 {"value", res.value},
                 {"method", method_name(res.method)},
                 {"argmax_a", res.argmax_a},
                 {"family_values",
                  {{"diagonal", res.family_values.diagonal},
                   {"offdiagonal", res.family_values.offdiagonal}}},
                 {"witness", witness_json(res.witness)},
                 {"exploratory", args.p > 4.0}};
    std::printf("%s\n", j.dump().c_str());
    return 0;
  }
  const int d = args.digits;
  std::printf("p          = %s\n", sig(args.p, d).c_str());
  std::printf("q          = %s\n", sig(q, d).c_str());
  std::printf("constant   = %s\n", sig(res.value, d).c_str());
  std::printf("method     = %s\n", method_name(res.method));
  std::printf("argmax_a   = %s\n", sig(res.argmax_a, d).c_str());
  std::printf("family_max = diagonal %s, offdiagonal %s\n",
              sig(res.family_values.diagonal, d).c_str(),
              sig(res.family_values.offdiagonal, d).c_str());
  std::printf("witness    = c20=%s c11=%s c02=%s (%s, a=%s, sign=%+d)\n",
              sig(res.witness.poly.c20, d).c_str(),
              sig(res.witness.poly.c11, d).c_str(),
              sig(res.witness.poly.c02, d).c_str(),
              family_name(res.witness.family), sig(res.witness.param_a, d).c_str(),
              res.witness.sign);
  return 0;
}

struct TableArgs {
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  std::string q_rule = "critical";
  bool as_json = false;
};

int run_table(const TableArgs& args) {
  if (!(args.from > 2.0)) {
    std::fprintf(stderr, "error: --from must be > 2\n");
    return 2;
  }
  if (!(args.step > 0.0)) {
    std::fprintf(stderr, "error: --step must be > 0\n");
    return 2;
  }
  if (args.to < args.from) {
    std::fprintf(stderr, "error: empty range, --to is below --from\n");
    return 2;
  }
  std::optional<double> fixed_q;
  if (args.q_rule != "critical") {
    const std::string prefix = "fixed:";
    if (args.q_rule.rfind(prefix, 0) != 0) {
      std::fprintf(stderr, "error: --q-rule must be 'critical' or 'fixed:<value>'\n");
      return 2;
    }
    try {
      fixed_q = std::stod(args.q_rule.substr(prefix.size()));
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: bad value in --q-rule\n");
      return 2;
    }
    if (!(*fixed_q >= 1.0)) {
      std::fprintf(stderr, "error: --q-rule fixed value must be >= 1\n");
      return 2;
    }
  }
  struct Row {
    double p, q, value, argmax;
    hlpoly::Method method;
  };
  std::vector<Row> rows;
  const double slack = args.step * 1e-9;
  bool any_exploratory = false;
  for (std::size_t i = 0;; ++i) {
    const double p = args.from + static_cast<double>(i) * args.step;
    if (p > args.to + slack) break;
    const double q = fixed_q ? *fixed_q : hlpoly::critical_exponent(p);
    const hlpoly::ConstantResult res = hlpoly::constant(p, q);
    rows.push_back({p, q, res.value, res.argmax_a, res.method});
    any_exploratory = any_exploratory || p > 4.0;
  }
  if (any_exploratory) print_exploratory_note(8.0);
  if (args.as_json) {
    json jrows = json::array();
    for (const Row& r : rows) {
      jrows.push_back(json{{"p", r.p},
                           {"q", r.q},
                           {"constant", r.value},
                           {"method", method_name(r.method)},
                           {"argmax_a", r.argmax}});
    }
    std::printf("%s\n", json{{"rows", jrows}}.dump().c_str());
    return 0;
  }
  std::printf("p,q,constant,method,argmax_a\n");
  for (const Row& r : rows) {
    std::printf("%s,%s,%s,%s,%s\n", shortest(r.p).c_str(), shortest(r.q).c_str(),
                shortest(r.value).c_str(), method_name(r.method),
                shortest(r.argmax).c_str());
  }
  return 0;
}

struct ScanArgs {
  double p = 0.0;
  std::optional<double> q;
  std::size_t n = 1001;
  bool as_json = false;
};

int run_scan(const ScanArgs& args) {
  const double q = args.q ? *args.q : hlpoly::critical_exponent(args.p);
  const hlpoly::ScanReport report = hlpoly::build_scan(args.p, q, args.n);
  print_exploratory_note(args.p);
  if (args.as_json) {
    json pts = json::array();
    for (const hlpoly::ScanPoint& pt : report.points) {
      pts.push_back(json{
          {"a", pt.a}, {"diagonal", pt.diagonal}, {"offdiagonal", pt.offdiagonal}});
    }
    const json j{{"p", report.p},
                 {"q", report.q},
                 {"points", pts},
                 {"argmax",
                  {{"branch", family_name(report.argmax.branch)},
                   {"a", report.argmax.a},
                   {"value", report.argmax.value}}}};
    std::printf("%s\n", j.dump().c_str());
    return 0;
  }
  std::printf("a,diagonal_objective,offdiag_objective\n");
  for (const hlpoly::ScanPoint& pt : report.points) {
    std::printf("%s,%s,%s\n", shortest(pt.a).c_str(), shortest(pt.diagonal).c_str(),
                shortest(pt.offdiagonal).c_str());
  }
  std::fprintf(stderr, "argmax: branch=%s a=%s value=%s\n",
               family_name(report.argmax.branch), shortest(report.argmax.a).c_str(),
               shortest(report.argmax.value).c_str());
  return 0;
}

struct VerifyArgs {
  double p = 0.0;
  std::optional<double> q;
  std::size_t trials = 10000;
  std::optional<std::uint64_t> seed;
  bool as_json = false;
  int digits = 10;
};

int run_verify(const VerifyArgs& args) {
  std::uint64_t seed = 42;
  if (args.seed) {
    seed = *args.seed;
  } else if (const char* env = std::getenv("HL_SEED")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      std::fprintf(stderr, "error: HL_SEED is not an unsigned integer\n");
      return 2;
    }
    seed = parsed;
  }
  const double q = args.q ? *args.q : hlpoly::critical_exponent(args.p);
  const hlpoly::VerificationReport report =
      hlpoly::check_hl_inequality(args.p, q, args.trials, seed);
  print_exploratory_note(args.p);
  if (args.as_json) {
    const json j{{"p", args.p},
                 {"q", q},
                 {"trials", report.trials},
                 {"seed", report.seed},
                 {"skipped", report.skipped},
                 {"constant", report.constant_used},
                 {"max_ratio", report.max_ratio},
                 {"max_trial", report.max_trial},
                 {"worst_case",
                  {{"c20", report.worst_case.c20},
                   {"c11", report.worst_case.c11},
                   {"c02", report.worst_case.c02}}},
                 {"pass", report.pass}};
    std::printf("%s\n", j.dump().c_str());
  } else {
    const int d = args.digits;
    std::printf("p          = %s\n", sig(args.p, d).c_str());
    std::printf("q          = %s\n", sig(q, d).c_str());
    std::printf("trials     = %zu\n", report.trials);
    std::printf("seed       = %llu\n", static_cast<unsigned long long>(report.seed));
    std::printf("skipped    = %zu\n", report.skipped);
    std::printf("constant   = %s\n", sig(report.constant_used, d).c_str());
    std::printf("max_ratio  = %s\n", sig(report.max_ratio, d).c_str());
    std::printf("max_trial  = %zu\n", report.max_trial);
    std::printf("worst_case = c20=%s c11=%s c02=%s\n",
                sig(report.worst_case.c20, d).c_str(),
                sig(report.worst_case.c11, d).c_str(),
                sig(report.worst_case.c02, d).c_str());
    std::printf("verdict    = %s\n", report.pass ? "PASS" : "FAIL");
  }
  return report.pass ? 0 : 1;
}

struct WitnessArgs {
  double p = 0.0;
  std::optional<double> q;
  bool as_json = false;
  int digits = 10;
};

int run_witness(const WitnessArgs& args) {
  const double q = args.q ? *args.q : hlpoly::critical_exponent(args.p);
  const hlpoly::ConstantResult res = hlpoly::constant(args.p, q);
  const double cn = hlpoly::coeff_norm(res.witness.poly, q);
  const double sn = hlpoly::sup_norm(res.witness.poly, args.p);
  print_exploratory_note(args.p);
  if (args.as_json) {
    json j = witness_json(res.witness);
    j["coeff_norm"] = cn;
    j["sup_norm"] = sn;
    j["ratio"] = cn / sn;
    j["constant"] = res.value;
    j["exploratory"] = args.p > 4.0;
    std::printf("%s\n", j.dump().c_str());
    return 0;
  }
  const int d = args.digits;
  std::printf("family     = %s\n", family_name(res.witness.family));
  std::printf("param_a    = %s\n", sig(res.witness.param_a, d).c_str());
  std::printf("sign       = %+d\n", res.witness.sign);
  std::printf("c20        = %s\n", sig(res.witness.poly.c20, d).c_str());
  std::printf("c11        = %s\n", sig(res.witness.poly.c11, d).c_str());
  std::printf("c02        = %s\n", sig(res.witness.poly.c02, d).c_str());
  std::printf("coeff_norm = %s\n", sig(cn, d).c_str());
  std::printf("sup_norm   = %s\n", sig(sn, d).c_str());
  std::printf("ratio      = %s\n", sig(cn / sn, d).c_str());
  std::printf("constant   = %s\n", sig(res.value, d).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal Hardy-Littlewood constants for 2-homogeneous "
               "polynomials on l_p(R^2)"};
  app.require_subcommand(1);

  ConstantArgs cargs;
  CLI::App* c = app.add_subcommand("constant", "Compute C(p, q)");
  c->add_option("--p", cargs.p, "Space exponent, p > 2")->required();
  CLI::Option* cq = c->add_option("--q", cargs.q, "Coefficient norm exponent, q >= 1");
  c->add_flag("--numeric", cargs.numeric, "Force the numeric two-branch maximization");
  c->add_flag("--json", cargs.as_json, "Emit JSON");
  c->add_option("--digits", cargs.digits, "Significant digits in text output")
      ->check(CLI::Range(1, 17));

  TableArgs targs;
  CLI::App* t = app.add_subcommand("table", "CSV table of C(p, q) over a p range");
  t->add_option("--from", targs.from, "First p value")->required();
  t->add_option("--to", targs.to, "Last p value")->required();
  t->add_option("--step", targs.step, "p increment")->required();
  t->add_option("--q-rule", targs.q_rule,
                "Per-row q: 'critical' or 'fixed:<value>' (default critical)");
  t->add_flag("--json", targs.as_json, "Emit JSON");

  ScanArgs sargs;
  CLI::App* s = app.add_subcommand("scan", "Sample both branch objectives over a");
  s->add_option("--p", sargs.p, "Space exponent, p > 2")->required();
  CLI::Option* sq = s->add_option("--q", sargs.q, "Coefficient norm exponent, q >= 1");
  s->add_option("--n", sargs.n, "Number of a samples (default 1001)");
  s->add_flag("--json", sargs.as_json, "Emit JSON");

  VerifyArgs vargs;
  CLI::App* v = app.add_subcommand("verify", "Random-sampling inequality check");
  v->add_option("--p", vargs.p, "Space exponent, p > 2")->required();
  CLI::Option* vq = v->add_option("--q", vargs.q, "Coefficient norm exponent, q >= 1");
  v->add_option("--trials", vargs.trials, "Number of random trials (default 10000)");
  CLI::Option* vs = v->add_option("--seed", vargs.seed, "RNG seed (beats HL_SEED)");
  v->add_flag("--json", vargs.as_json, "Emit JSON");
  v->add_option("--digits", vargs.digits, "Significant digits in text output")
      ->check(CLI::Range(1, 17));

  WitnessArgs wargs;
  CLI::App* w = app.add_subcommand("witness", "Sharpness witness for C(p, q)");
  w->add_option("--p", wargs.p, "Space exponent, p > 2")->required();
  CLI::Option* wq = w->add_option("--q", wargs.q, "Coefficient norm exponent, q >= 1");
  w->add_flag("--json", wargs.as_json, "Emit JSON");
  w->add_option("--digits", wargs.digits, "Significant digits in text output")
      ->check(CLI::Range(1, 17));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // CLI11 leaves unset optionals untouched; normalize them here.
  if (!*cq) cargs.q.reset();
  if (!*sq) sargs.q.reset();
  if (!*vq) vargs.q.reset();
  if (!*wq) wargs.q.reset();
  if (!*vs) vargs.seed.reset();

  try {
    if (c->parsed()) return run_constant(cargs);
    if (t->parsed()) return run_table(targs);
    if (s->parsed()) return run_scan(sargs);
    if (v->parsed()) return run_verify(vargs);
    if (w->parsed()) return run_witness(wargs);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
