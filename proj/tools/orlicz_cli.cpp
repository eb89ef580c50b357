#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/scenario.hpp"

namespace {

using orlicz::Json;

Json num_or_inf(double v) {
  if (v == orlicz::kInf) return Json("inf");
  return Json(v);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::vector<double> parse_range(const std::string& spec) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(step > 0.0) || hi < lo)
    throw orlicz::ArgumentError("range must look like lo:hi:step with step > 0");
  std::vector<double> out;
  const int n = static_cast<int>(std::llround((hi - lo) / step));
  for (int i = 0; i <= n; ++i) out.push_back(lo + i * step);
  return out;
}

std::uint64_t effective_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("ORLICZ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw orlicz::ArgumentError("ORLICZ_SEED must be a nonnegative integer");
    }
  }
  return fallback;
}

Json budgets_json(const orlicz::Budgets& b) {
  Json j;
  j["falsifier"] = b.falsifier;
  j["modulus"] = b.modulus;
  j["ascent"] = b.ascent;
  j["samples"] = b.samples;
  return j;
}

Json envelope(const std::string& command, const std::string& hash,
              std::uint64_t seed, const orlicz::Budgets& budgets,
              Json tolerances, Json result) {
  Json j;
  j["command"] = command;
  j["scenario_hash"] = hash;
  j["seed"] = seed;
  j["budgets"] = budgets_json(budgets);
  j["tolerances"] = std::move(tolerances);
  j["result"] = std::move(result);
  return j;
}

void write_out(const std::string& path, const Json& report, const std::string& csv) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw orlicz::ArgumentError("cannot write '" + path + "'");
  const bool want_csv =
      !csv.empty() && path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
  if (want_csv)
    out << csv;
  else
    out << report.dump(2) << "\n";
}

struct YoungFlags {
  std::string family = "power";
  double p = 2.0;
  double c = 1.0;
  double t0 = 1.0;
  std::vector<double> breaks;
  std::vector<double> slopes;
  std::vector<double> grid_t;
  std::vector<double> grid_y;
  std::string tail = "linear";

  orlicz::YoungFunction build() const {
    using YF = orlicz::YoungFunction;
    if (family == "power") return YF::power(p);
    if (family == "scaled_power") return YF::scaled_power(c, p);
    if (family == "linear_jump") return YF::linear_jump(t0);
    if (family == "piecewise_linear") return YF::piecewise_linear(breaks, slopes);
    if (family == "tabulated")
      return YF::tabulated(grid_t, grid_y,
                           tail == "jump" ? YF::Tail::jump : YF::Tail::linear);
    throw orlicz::ArgumentError("unknown family '" + family + "'");
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "power | scaled_power | linear_jump | piecewise_linear | tabulated");
    cmd->add_option("--p", p, "exponent for the power families");
    cmd->add_option("--c", c, "coefficient for scaled_power");
    cmd->add_option("--t0", t0, "jump threshold for linear_jump");
    cmd->add_option("--breaks", breaks, "piecewise breakpoints")->delimiter(',');
    cmd->add_option("--slopes", slopes, "piecewise slopes")->delimiter(',');
    cmd->add_option("--grid-t", grid_t, "tabulated abscissae")->delimiter(',');
    cmd->add_option("--grid-y", grid_y, "tabulated values")->delimiter(',');
    cmd->add_option("--tail", tail, "tabulated tail: linear | jump");
  }
};

orlicz::NormFlavor flavor_of(const std::string& s) {
  if (s == "luxemburg") return orlicz::NormFlavor::luxemburg;
  if (s == "orlicz") return orlicz::NormFlavor::orlicz;
  throw orlicz::ArgumentError("flavor must be luxemburg or orlicz");
}

std::unique_ptr<orlicz::NormedSpace> space_of(const orlicz::Scenario& sc,
                                              std::string choice,
                                              orlicz::NormFlavor flavor,
                                              std::size_t atom) {
  if (choice.empty()) choice = sc.module ? "composite" : "scalar";
  if (choice == "scalar")
    return std::make_unique<orlicz::ScalarOrliczSpace>(sc.context(), flavor);
  if (choice == "composite")
    return std::make_unique<orlicz::ModuleOrliczSpace>(sc.module_context(), flavor);
  if (choice == "fiber") {
    if (!sc.module) throw orlicz::ArgumentError("fiber space needs a module block");
    return std::make_unique<orlicz::FiberSpace>(sc.module, atom);
  }
  throw orlicz::ArgumentError("space must be scalar, composite or fiber");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for Orlicz norms over finite random-normed modules"};
  app.require_subcommand(1);

  std::string out_path;
  double tol_override = -1.0;
  app.add_option("--out", out_path, "write the JSON (or CSV) report here");
  app.add_option("--tol", tol_override, "override the command's headline tolerance");

  // young -------------------------------------------------------------
  auto* young = app.add_subcommand("young", "Young function operations");
  young->require_subcommand(1);
  YoungFlags yflags;
  std::string table_spec = "0:4:0.5";
  auto* yconj = young->add_subcommand("conjugate", "table of the conjugate");
  yflags.attach(yconj);
  yconj->add_option("--table", table_spec, "grid lo:hi:step");
  auto* yval = young->add_subcommand("validate", "axioms and doubling growth");
  yflags.attach(yval);
  auto* ytab = young->add_subcommand("table", "table of the function itself");
  yflags.attach(ytab);
  ytab->add_option("--table", table_spec, "grid lo:hi:step");

  // scenario-based ----------------------------------------------------
  std::string scenario_path, name, flavor_str = "luxemburg";
  std::string which = "luxemburg", target = "scalar", space_choice;
  std::size_t atom = 0;
  double eps = 1.0;
  std::vector<double> eps_list = {0.2, 0.5, 1.0, 1.5, 2.0};
  long long budget_override = -1;
  bool roundtrip = false;

  const auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    cmd->add_option("--name", name, "named entry in the scenario");
  };

  auto* norm = app.add_subcommand("norm", "scalar or composite norm of an entry");
  add_scenario(norm);
  norm->add_option("--which", which, "luxemburg | orlicz");
  norm->add_option("--target", target, "scalar | module");

  auto* dual = app.add_subcommand("dual-norm", "atomwise conjugate-exponent norm of a functional");
  add_scenario(dual);

  auto* duality = app.add_subcommand("duality-check", "operator norm against the conjugate norm");
  add_scenario(duality);
  duality->add_option("--flavor", flavor_str, "luxemburg | orlicz");

  auto* rep = app.add_subcommand("represent", "recover a functional from its evaluations");
  add_scenario(rep);
  rep->add_flag("--roundtrip", roundtrip, "embed the named functional and recover it (default behavior)");

  auto* conv = app.add_subcommand("convexity", "strict convexity and moduli");
  conv->require_subcommand(1);
  auto* creport = conv->add_subcommand("report", "scalar, fiber and composite checks with lifts");
  add_scenario(creport);
  creport->add_option("--flavor", flavor_str, "luxemburg | orlicz");
  creport->add_option("--budget", budget_override, "search budget override");
  auto* cfals = conv->add_subcommand("falsify", "hunt for a flat midpoint");
  add_scenario(cfals);
  cfals->add_option("--flavor", flavor_str, "luxemburg | orlicz");
  cfals->add_option("--space", space_choice, "scalar | composite | fiber");
  cfals->add_option("--atom", atom, "atom index for --space fiber");
  cfals->add_option("--budget", budget_override, "search budget override");
  auto* cmod = conv->add_subcommand("modulus", "modulus of convexity estimate");
  add_scenario(cmod);
  cmod->add_option("--flavor", flavor_str, "luxemburg | orlicz");
  cmod->add_option("--space", space_choice, "scalar | composite | fiber | atoms");
  cmod->add_option("--atom", atom, "atom index for --space fiber");
  cmod->add_option("--eps", eps, "separation in (0, 2]");
  cmod->add_option("--budget", budget_override, "search budget override");

  auto* harness = app.add_subcommand("harness", "equivalence and modulus harnesses");
  harness->require_subcommand(1);
  auto* h54 = harness->add_subcommand("theorem54", "strict-convexity equivalence across the three layers");
  add_scenario(h54);
  h54->add_option("--flavor", flavor_str, "luxemburg | orlicz");
  h54->add_option("--budget", budget_override, "search budget override");
  auto* h57 = harness->add_subcommand("theorem57", "modulus estimates across the three layers");
  add_scenario(h57);
  h57->add_option("--flavor", flavor_str, "luxemburg | orlicz");
  h57->add_option("--eps", eps, "separation in (0, 2]");
  h57->add_option("--budget", budget_override, "search budget override");
  auto* h58 = harness->add_subcommand("remark58", "tabulate composite against component moduli");
  add_scenario(h58);
  h58->add_option("--flavor", flavor_str, "luxemburg | orlicz");
  h58->add_option("--eps-list", eps_list, "separations to tabulate")->delimiter(',');
  h58->add_option("--budget", budget_override, "search budget override");

  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* s : a->get_subcommands([](CLI::App*) { return true; })) {
      s->fallthrough();
      enable_fallthrough(s);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json report;
    std::string csv;
    int exit_code = 0;

    // Commands without a scenario file hash their inline inputs instead.
    if (young->parsed()) {
      const orlicz::YoungFunction phi = yflags.build();
      const Json phi_json = orlicz::to_json(phi);
      const std::string hash = orlicz::fnv1a_hex(phi_json.dump());
      const orlicz::Budgets budgets;
      const std::uint64_t seed = effective_seed(1);
      Json result;
      result["young"] = phi_json;

      if (yconj->parsed()) {
        const orlicz::YoungFunction psi = phi.conjugate();
        result["conjugate"] = orlicz::to_json(psi);
        Json rows = Json::array();
        std::ostringstream body;
        body << "s,psi\n";
        for (double s : parse_range(table_spec)) {
          const double v = psi(s);
          rows.push_back(Json::array({s, num_or_inf(v)}));
          body << fmt(s) << "," << fmt(v) << "\n";
        }
        result["table"] = std::move(rows);
        csv = body.str();
        std::cout << "conjugate of " << phi_json.dump() << " tabulated at "
                  << result["table"].size() << " points\n";
        report = envelope("young conjugate", hash, seed, budgets, Json::object(),
                          std::move(result));
      } else if (yval->parsed()) {
        const auto validity = phi.validate();
        result["validity"] = orlicz::to_json(validity);
        const auto d2 = phi.delta2();
        result["delta2"] = d2 == orlicz::Delta2::yes
                               ? "yes"
                               : (d2 == orlicz::Delta2::no ? "no" : "unknown");
        if (const auto w = phi.delta2_witness()) result["delta2_witness"] = *w;
        std::cout << (validity.valid ? "valid" : "invalid") << ", doubling growth: "
                  << result["delta2"].get<std::string>() << "\n";
        for (const auto& v : validity.violations) std::cout << "  violation: " << v << "\n";
        report = envelope("young validate", hash, seed, budgets, Json::object(),
                          std::move(result));
        exit_code = validity.valid ? 0 : 1;
      } else {
        Json rows = Json::array();
        std::ostringstream body;
        body << "t,phi\n";
        for (double t : parse_range(table_spec)) {
          const double v = phi(t);
          rows.push_back(Json::array({t, num_or_inf(v)}));
          body << fmt(t) << "," << fmt(v) << "\n";
        }
        result["table"] = std::move(rows);
        csv = body.str();
        std::cout << "tabulated " << phi_json.dump() << " at "
                  << result["table"].size() << " points\n";
        report = envelope("young table", hash, seed, budgets, Json::object(),
                          std::move(result));
      }
      write_out(out_path, report, csv);
      return exit_code;
    }

    // Everything below runs off a scenario file.
    orlicz::Scenario sc = orlicz::Scenario::from_file(scenario_path);
    if (budget_override > 0) {
      sc.budgets.falsifier = budget_override;
      sc.budgets.modulus = budget_override;
    }
    const std::uint64_t seed = effective_seed(sc.seed);
    const orlicz::NormFlavor flavor = flavor_of(flavor_str);
    Json tolerances = Json::object();
    Json result;

    if (norm->parsed()) {
      const orlicz::NormFlavor w = flavor_of(which);
      double value = 0.0;
      if (target == "scalar")
        value = orlicz::scalar_norm(sc.context(), sc.scalar(name), w);
      else if (target == "module")
        value = orlicz::module_norm(sc.module_context(), sc.element(name), w);
      else
        throw orlicz::ArgumentError("target must be scalar or module");
      result["which"] = which;
      result["target"] = target;
      result["value"] = value;
      std::cout << which << " norm = " << std::setprecision(12) << value << "\n";
      report = envelope("norm", sc.hash, seed, sc.budgets, tolerances, result);
    } else if (dual->parsed()) {
      const auto& f = sc.functional(name);
      const orlicz::RandomVariable dn = orlicz::dual_random_norm(f);
      result["values"] = dn.values();
      double gap = 0.0;
      if (f.fiber_dim() <= 4) {
        const orlicz::RandomVariable oracle =
            orlicz::dual_norm_oracle(f, 20000, seed);
        result["oracle"] = oracle.values();
        for (std::size_t i = 0; i < dn.values().size(); ++i)
          gap = std::max(gap, std::fabs(dn[i] - oracle[i]));
        result["max_gap"] = gap;
      }
      const double tol = tol_override > 0 ? tol_override : 1e-6;
      tolerances["oracle_gap"] = tol;
      exit_code = gap <= tol ? 0 : 1;
      std::cout << "dual norm computed on " << dn.values().size()
                << " atoms, oracle gap " << gap << "\n";
      report = envelope("dual-norm", sc.hash, seed, sc.budgets, tolerances, result);
    } else if (duality->parsed()) {
      const auto rep_out = orlicz::isometry_check(sc.functional(name),
                                                  sc.module_context(), flavor,
                                                  sc.budgets.ascent, seed);
      tolerances["isometry"] = tol_override > 0 ? tol_override : 1e-4;
      bool pass = rep_out.pass;
      if (tol_override > 0)
        pass = std::fabs(rep_out.lhs - rep_out.rhs) <=
               tol_override * std::max(rep_out.rhs, 1.0);
      result = orlicz::to_json(rep_out);
      result["pass"] = pass;
      exit_code = pass ? 0 : 1;
      std::cout << "lhs " << std::setprecision(12) << rep_out.lhs << " vs rhs "
                << rep_out.rhs << " -> " << (pass ? "pass" : "FAIL") << "\n";
      report = envelope("duality-check", sc.hash, seed, sc.budgets, tolerances, result);
    } else if (rep->parsed()) {
      (void)roundtrip;  // recovering the embedded functional is the one mode
      const auto& f0 = sc.functional(name);
      const orlicz::ModuleOrliczContext mctx = sc.module_context();
      const orlicz::EmbeddedFunctional tf = orlicz::embed(f0, mctx);
      const auto rr = orlicz::represent(
          [&](const orlicz::ModuleElement& x) { return tf(x); }, mctx, seed);
      double entry_gap = 0.0;
      for (std::size_t i = 0; i < f0.flat().size(); ++i)
        entry_gap = std::max(entry_gap, std::fabs(f0.flat()[i] - rr.f.flat()[i]));
      double xg_gap = 0.0;
      for (std::size_t i = 0; i < rr.x_g.size(); ++i)
        xg_gap = std::max(xg_gap, std::fabs(rr.x_g[i] - rr.dual_norm_of_f[i]));
      const double tol = tol_override > 0 ? tol_override : 1e-12;
      tolerances["roundtrip"] = tol;
      tolerances["spanning"] = 1e-9;
      tolerances["x_g"] = 1e-12;
      result = orlicz::to_json(rr);
      result["roundtrip_gap"] = entry_gap;
      result["x_g_gap"] = xg_gap;
      const bool pass = entry_gap <= tol && rr.max_spanning_residual <= 1e-9 &&
                        xg_gap <= 1e-12;
      result["pass"] = pass;
      exit_code = pass ? 0 : 1;
      std::cout << "roundtrip gap " << entry_gap << ", spanning residual "
                << rr.max_spanning_residual << " -> " << (pass ? "pass" : "FAIL")
                << "\n";
      report = envelope("represent", sc.hash, seed, sc.budgets, tolerances, result);
    } else if (creport->parsed() || h54->parsed()) {
      const auto out = orlicz::equivalence_harness(sc.module_context(), flavor,
                                                   sc.budgets.falsifier, seed);
      tolerances["midpoint"] = 1e-9;
      tolerances["distinct"] = 1e-6;
      result = orlicz::to_json(out);
      const bool pass = out.consistent && out.lifts_valid;
      exit_code = pass ? 0 : 1;
      std::cout << "scalar "
                << (out.scalar.status == orlicz::ConvexityVerdict::Status::falsified
                        ? "falsified"
                        : "verified")
                << ", fibers " << (out.fibers.all_verified ? "verified" : "falsified")
                << ", composite "
                << (out.composite.status == orlicz::ConvexityVerdict::Status::falsified
                        ? "falsified"
                        : "verified")
                << ", consistent " << (out.consistent ? "yes" : "NO") << "\n";
      report = envelope(h54->parsed() ? "harness theorem54" : "convexity report",
                        sc.hash, seed, sc.budgets, tolerances, result);
    } else if (cfals->parsed()) {
      const auto space = space_of(sc, space_choice, flavor, atom);
      const auto verdict =
          orlicz::strict_convexity_falsifier(*space, sc.budgets.falsifier, seed);
      tolerances["midpoint"] = 1e-9;
      tolerances["distinct"] = 1e-6;
      result = orlicz::to_json(verdict);
      result["space"] = space->describe();
      const bool fals =
          verdict.status == orlicz::ConvexityVerdict::Status::falsified;
      exit_code = fals ? 1 : 0;
      std::cout << space->describe() << ": "
                << (fals ? "falsified" : "verified-by-search") << "\n";
      report = envelope("convexity falsify", sc.hash, seed, sc.budgets, tolerances,
                        result);
    } else if (cmod->parsed()) {
      if (space_choice == "atoms") {
        const auto out = orlicz::random_modulus(
            sc.module,
            orlicz::BoundedAwayField::constant(sc.space, eps, 2.0),
            sc.budgets.modulus, seed);
        result = orlicz::to_json(out);
        std::cout << "atomwise modulus infimum " << out.infimum << "\n";
      } else {
        const auto space = space_of(sc, space_choice, flavor, atom);
        const auto est =
            orlicz::modulus_of_convexity(*space, eps, sc.budgets.modulus, seed);
        result = orlicz::to_json(est);
        result["space"] = space->describe();
        std::cout << space->describe() << ": delta(" << eps << ") <= " << est.delta
                  << "\n";
      }
      report = envelope("convexity modulus", sc.hash, seed, sc.budgets, tolerances,
                        result);
    } else if (h57->parsed()) {
      const auto out = orlicz::modulus_harness(sc.module_context(), flavor, eps,
                                               sc.budgets.modulus, seed);
      result = orlicz::to_json(out);
      exit_code = out.contradiction ? 1 : 0;
      std::cout << "scalar delta " << out.scalar.delta << ", fiber min "
                << out.fiber_min << ", composite " << out.composite.delta
                << (out.contradiction ? " -> CONTRADICTION" : "") << "\n";
      report = envelope("harness theorem57", sc.hash, seed, sc.budgets, tolerances,
                        result);
    } else if (h58->parsed()) {
      const auto rows = orlicz::modulus_survey(sc.module_context(), flavor, eps_list,
                                               sc.budgets.modulus, seed);
      result["rows"] = orlicz::to_json(rows);
      std::ostringstream body;
      body << "epsilon,scalar_delta,fiber_min_delta,composite_delta\n";
      for (const auto& r : rows)
        body << fmt(r.epsilon) << "," << fmt(r.scalar_delta) << ","
             << fmt(r.fiber_min_delta) << "," << fmt(r.composite_delta) << "\n";
      csv = body.str();
      std::cout << "tabulated " << rows.size() << " epsilon values\n";
      report = envelope("harness remark58", sc.hash, seed, sc.budgets, tolerances,
                        result);
    } else {
      throw orlicz::ArgumentError("no subcommand dispatched");
    }

    write_out(out_path, report, csv);
    return exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
