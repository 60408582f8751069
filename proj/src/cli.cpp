#include "abeta/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "abeta/bounds.hpp"
#include "abeta/radii.hpp"
#include "abeta/verify.hpp"

namespace abeta::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 12 significant digits; the shortest round-trip printer then keeps it short.
double sig12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(fmt::format("{:.12g}", x));
}

struct Options {
  std::string format = "json";
  std::string output;
  std::optional<double> beta;
  int n = 2;
  double mu = 1.0;
  int power = 1;
  double p = 2.0;
  double r = 0.5;
  int m = 1;
  std::optional<int> N;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::string theorem;
  bool bohr = false;
  bool rogosinski = false;
  bool table1 = false;
  bool full = false;
  int grid_steps = 400;
  std::vector<double> grid;
  std::optional<double> from, to, step;
};

BoundParams params_of(const Options& o) {
  return {.n = o.n, .mu = o.mu, .power = o.power, .p = o.p, .r = o.r};
}

BetaParam require_beta(const Options& o) {
  if (!o.beta) throw UsageError("--beta is required");
  if (!(*o.beta >= 0.0 && *o.beta <= 1.0)) throw UsageError("--beta must lie in [0, 1]");
  return BetaParam(*o.beta);
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("ABETA_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("ABETA_SEED is not an unsigned integer");
    }
  }
  return 1;
}

Json params_json(TheoremId id, const BoundParams& p) {
  Json j = Json::object();
  switch (id) {
    case TheoremId::kCoeff:
    case TheoremId::kH2:
    case TheoremId::kT2n:
      j["n"] = p.n;
      break;
    case TheoremId::kHankelMu:
      j["n"] = p.n;
      j["mu"] = sig12(p.mu);
      break;
    case TheoremId::kCoeffDiff:
      j["n"] = p.n;
      j["N"] = p.power;
      j["p"] = sig12(p.p);
      break;
    case TheoremId::kGrowthUpper:
    case TheoremId::kGrowthLower:
    case TheoremId::kReFzUpper:
    case TheoremId::kReFzLower:
      j["r"] = sig12(p.r);
      break;
    default:
      break;
  }
  return j;
}

Json report_json(const VerifyReport& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["beta"] = sig12(r.beta);
  j["params"] = params_json(*parse_theorem(r.theorem_id), r.params);
  j["side"] = r.side == BoundSide::kUpper ? "upper" : "lower";
  j["samples"] = r.samples;
  j["max_observed"] = sig12(r.max_observed);
  j["bound"] = sig12(r.bound);
  j["attainment_gap"] = sig12(r.attainment_gap);
  j["witness"] = r.witness;
  j["violations"] = r.violations;
  j["sharp"] = std::string(to_string(r.sharp));
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json radius_json(double beta, const RadiusResult& r) {
  Json j;
  j["equation"] = r.equation.label();
  j["beta"] = sig12(beta);
  j["radius"] = sig12(r.radius);
  j["residual"] = sig12(r.residual);
  j["bracket"] = Json::array({sig12(r.lo), sig12(r.hi)});
  j["iterations"] = r.iterations;
  return j;
}

// Newline-delimited JSON or CSV with LF endings.
class Emitter {
 public:
  Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  bool csv() const { return format_ == "csv"; }

  void json(const Json& j) { out_ << j.dump() << '\n'; }

  void csv_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << quote(cells[i]);
    }
    out_ << '\n';
  }

 private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }

  std::ostream& out_;
  std::string format_;
};

std::string num(double x) { return fmt::format("{:.12g}", x); }

int cmd_bounds(const Options& o, Emitter& emit) {
  const auto beta = require_beta(o);
  std::vector<TheoremId> ids;
  if (o.theorem.empty() || o.theorem == "all") {
    for (const auto& info : theorem_registry()) ids.push_back(info.id);
  } else {
    const auto id = parse_theorem(o.theorem);
    if (!id) throw UsageError("unknown --theorem '" + o.theorem + "'");
    ids.push_back(*id);
  }
  const auto params = params_of(o);
  if (emit.csv()) emit.csv_row({"theorem_id", "beta", "params", "value", "sharp"});
  for (const auto id : ids) {
    const auto bound = evaluate_bound(id, beta, params);
    if (emit.csv()) {
      emit.csv_row({bound.theorem_id, num(beta.value()), params_json(id, params).dump(),
                    num(bound.value), std::string(to_string(bound.sharp))});
    } else {
      Json j;
      j["theorem_id"] = bound.theorem_id;
      j["beta"] = sig12(beta.value());
      j["params"] = params_json(id, params);
      j["value"] = sig12(bound.value);
      j["sharp"] = std::string(to_string(bound.sharp));
      emit.json(j);
    }
  }
  return kExitOk;
}

RadiusEquation equation_of(const Options& o) {
  if (o.m < 1) throw UsageError("--m must be >= 1");
  if (o.rogosinski || o.N) {
    const int N = o.N.value_or(1);
    if (N < 1) throw UsageError("--N must be >= 1");
    return RadiusEquation::rogosinski(o.m, N);
  }
  return RadiusEquation::bohr(o.m);
}

int cmd_radii(const Options& o, Emitter& emit, std::ostream& err) {
  if (o.table1) {
    int exit = kExitOk;
    if (emit.csv()) emit.csv_row({"beta", "computed", "published", "delta", "ok"});
    for (const auto& row : table1_published()) {
      const auto r = bohr_radius(BetaParam(row.beta), 1);
      const double delta = r.radius - row.radius;
      const bool ok = std::abs(delta) <= kTable1Tolerance;
      if (!ok) {
        err << fmt::format("DISCREPANCY beta={} computed={:.9f} published={} delta={:.3e}\n",
                           row.beta, r.radius, row.radius, delta);
        exit = kExitViolations;
      }
      if (emit.csv()) {
        emit.csv_row({fmt::format("{:.6f}", row.beta), fmt::format("{:.6f}", r.radius),
                      num(row.radius), fmt::format("{:.3e}", delta), ok ? "true" : "false"});
      } else {
        Json j;
        j["beta"] = sig12(row.beta);
        j["computed"] = sig12(r.radius);
        j["published"] = sig12(row.radius);
        j["delta"] = sig12(delta);
        j["ok"] = ok;
        emit.json(j);
      }
    }
    return exit;
  }
  const auto beta = require_beta(o);
  const auto r = solve_radius(beta, equation_of(o));
  if (emit.csv()) {
    emit.csv_row({"equation", "beta", "radius", "residual", "lo", "hi", "iterations"});
    emit.csv_row({r.equation.label(), num(beta.value()), num(r.radius), num(r.residual),
                  num(r.lo), num(r.hi), std::to_string(r.iterations)});
  } else {
    emit.json(radius_json(beta.value(), r));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, Emitter& emit) {
  const int samples = o.samples.value_or(10000);
  if (samples < 1) throw UsageError("--samples must be >= 1");
  const auto seed = resolve_seed(o);

  if (o.full) {
    int violations = 0;
    for (const auto& report : full_sweep(samples, seed)) {
      violations += report.violations;
      emit.json(report_json(report));
    }
    return violations == 0 ? kExitOk : kExitViolations;
  }

  const auto beta = require_beta(o);
  if (o.theorem == "zalcman-surface") {
    const auto s = scan_zalcman_surface(beta, o.grid_steps);
    const double expected = zalcman_bound(beta);
    Json j;
    j["check"] = "zalcman-surface";
    j["beta"] = sig12(beta.value());
    j["max"] = sig12(s.max_value);
    j["argmax"] = Json::array({sig12(s.p), sig12(s.rho)});
    j["bound"] = sig12(expected);
    const bool ok = std::abs(s.max_value - expected) <= 1e-6 && s.p <= 1e-6 && s.rho <= 1e-6;
    j["passed"] = ok;
    emit.json(j);
    return ok ? kExitOk : kExitViolations;
  }
  if (o.theorem == "t31-surface") {
    const auto s = verify_t31_lower_surface(beta);
    Json j;
    j["check"] = "t31-surface";
    j["beta"] = sig12(beta.value());
    j["grid_points"] = s.grid_points;
    j["derivative_violations"] = s.derivative_violations;
    j["argmin_p"] = sig12(s.argmin_p);
    j["expected_p"] = sig12(s.expected_p);
    j["min_value"] = sig12(s.min_value);
    j["bound"] = sig12(s.bound);
    j["passed"] = s.passed;
    emit.json(j);
    return s.passed ? kExitOk : kExitViolations;
  }
  if (o.theorem == "growth") {
    const std::vector<double> radii = {0.1, 0.2, 0.3, 0.5, 0.6, 0.7, 0.8, 0.9};
    const auto g = verify_growth(beta, samples, seed, radii);
    Json j;
    j["check"] = "growth";
    j["beta"] = sig12(beta.value());
    j["samples"] = g.samples;
    j["checks"] = g.checks;
    j["violations"] = g.violations;
    j["worst_upper_excess"] = sig12(g.worst_upper_excess);
    j["worst_lower_excess"] = sig12(g.worst_lower_excess);
    Json angular = Json::array();
    bool all_at_pi = true;
    for (const auto& a : g.angular) {
      angular.push_back({{"r", sig12(a.r)},
                         {"argmin_index", a.argmin_index},
                         {"grid_size", a.grid_size},
                         {"at_pi", a.at_pi},
                         {"monotone_breaks", a.monotone_breaks}});
      all_at_pi = all_at_pi && a.at_pi;
    }
    j["angular_min"] = angular;
    emit.json(j);
    return g.violations == 0 && all_at_pi ? kExitOk : kExitViolations;
  }

  const auto id = parse_theorem(o.theorem);
  if (!id) throw UsageError("unknown --theorem '" + o.theorem + "'");
  const auto report = verify_bound(*id, beta, params_of(o), samples, seed);
  emit.json(report_json(report));
  return report.violations == 0 ? kExitOk : kExitViolations;
}

int cmd_curve(const Options& o, std::ostream& out) {
  std::vector<double> grid = o.grid;
  if (grid.empty() && o.from && o.to && o.step) {
    if (!(*o.step > 0.0)) throw UsageError("--step must be positive");
    const int count = static_cast<int>(std::floor((*o.to - *o.from) / *o.step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) grid.push_back(*o.from + i * *o.step);
  }
  if (grid.empty()) throw UsageError("empty beta grid (use --grid or --from/--to/--step)");
  for (double b : grid) {
    if (!(b >= 0.0 && b < 1.0)) throw UsageError("grid values must lie in [0, 1)");
  }
  const auto curve = radius_curve(equation_of(o), grid);
  out << "beta,radius\n";
  for (const auto& point : curve) out << fmt::format("{:.6f},{:.6f}\n", point.beta, point.radius);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient bounds, growth envelopes and Bohr radii for the class A_beta"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--beta", o.beta, "filtration parameter in [0, 1]");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", o.output, "write data to this file instead of stdout");
  };

  auto* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds");
  add_common(bounds);
  bounds->add_option("--theorem", o.theorem, "theorem id (default: all)");
  bounds->add_option("--n", o.n);
  bounds->add_option("--mu", o.mu);
  bounds->add_option("--N", o.power, "power in the coefficient difference");
  bounds->add_option("--p", o.p, "real p_1 in [-2, 2]");
  bounds->add_option("--r", o.r, "radius for growth envelopes");

  auto* radii = app.add_subcommand("radii", "Bohr and Bohr-Rogosinski radii");
  add_common(radii);
  radii->add_flag("--bohr", o.bohr);
  radii->add_flag("--rogosinski", o.rogosinski);
  radii->add_flag("--table1", o.table1, "reproduce the published Bohr radius table");
  radii->add_option("--m", o.m);
  radii->add_option("--N", o.N, "tail start for the Rogosinski radius");

  auto* verify = app.add_subcommand("verify", "randomized bound verification");
  add_common(verify);
  verify->add_option("--theorem", o.theorem,
                     "theorem id, or zalcman-surface, t31-surface, growth");
  verify->add_option("--samples", o.samples);
  verify->add_option("--seed", o.seed, "overrides ABETA_SEED");
  verify->add_option("--n", o.n);
  verify->add_option("--mu", o.mu);
  verify->add_option("--N", o.power);
  verify->add_option("--p", o.p);
  verify->add_option("--r", o.r);
  verify->add_option("--grid-steps", o.grid_steps);
  verify->add_flag("--full", o.full, "every registered bound over the default beta grid");

  auto* curve = app.add_subcommand("curve", "radius versus beta as CSV");
  curve->add_option("--output,-o", o.output);
  curve->add_option("--grid", o.grid, "comma separated beta values")->delimiter(',');
  curve->add_option("--from", o.from);
  curve->add_option("--to", o.to);
  curve->add_option("--step", o.step);
  curve->add_option("--m", o.m);
  curve->add_option("--N", o.N, "Rogosinski tail start; Bohr radius when omitted");

  std::vector<std::string> argv_store = {"abeta"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file = std::make_unique<std::ofstream>(o.output, std::ios::binary);
    if (!*file) {
      err << "usage error: cannot open " << o.output << '\n';
      return kExitUsage;
    }
    sink = file.get();
  }
  Emitter emit(*sink, o.format);

  try {
    if (bounds->parsed()) return cmd_bounds(o, emit);
    if (radii->parsed()) return cmd_radii(o, emit, err);
    if (verify->parsed()) return cmd_verify(o, emit);
    if (curve->parsed()) return cmd_curve(o, *sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace abeta::cli
