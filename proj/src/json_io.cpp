#include "orlicz/json_io.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

std::vector<double> number_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) bad(where, "expected numeric entries");
    out.push_back(e.get<double>());
  }
  return out;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
  return *it;
}

// Infinity does not survive JSON numbers; exponents admit "inf" strings.
double exponent_from(const Json& e, const std::string& where) {
  if (e.is_string()) {
    if (e.get<std::string>() == "inf") return kInf;
    bad(where, "exponent strings must be 'inf'");
  }
  if (!e.is_number()) bad(where, "expected a number or 'inf'");
  return e.get<double>();
}

Json exponent_to(double p) {
  if (p == kInf) return Json("inf");
  return Json(p);
}

}  // namespace

Json to_json(const ProbSpace& space) {
  Json j;
  j["weights"] = space.weights();
  return j;
}

ProbSpacePtr space_from_json(const Json& j) {
  if (!j.is_object()) bad("space", "expected an object");
  return make_space(number_array(field(j, "weights", "space"), "space.weights"));
}

Json to_json(const YoungFunction& phi) {
  Json j;
  switch (phi.form()) {
    case YoungFunction::Form::power:
      j["family"] = "power";
      j["p"] = phi.power_exponent();
      break;
    case YoungFunction::Form::scaled_power:
      j["family"] = "scaled_power";
      j["c"] = phi.power_coef();
      j["p"] = phi.power_exponent();
      break;
    case YoungFunction::Form::linear_jump:
      j["family"] = "linear_jump";
      j["t0"] = phi.jump_threshold();
      break;
    case YoungFunction::Form::piecewise_linear:
      j["family"] = "piecewise_linear";
      j["breaks"] = phi.breaks();
      j["slopes"] = phi.slopes();
      break;
    case YoungFunction::Form::tabulated:
      j["family"] = "tabulated";
      j["t"] = phi.grid_t();
      j["y"] = phi.grid_y();
      j["tail"] = phi.tail() == YoungFunction::Tail::jump ? "jump" : "linear";
      break;
  }
  return j;
}

YoungFunction young_from_json(const Json& j) {
  if (!j.is_object()) bad("young", "expected an object");
  const auto& fam = field(j, "family", "young");
  if (!fam.is_string()) bad("young.family", "expected a string");
  const std::string family = fam.get<std::string>();
  if (family == "power")
    return YoungFunction::power(field(j, "p", "young").get<double>());
  if (family == "scaled_power")
    return YoungFunction::scaled_power(field(j, "c", "young").get<double>(),
                                       field(j, "p", "young").get<double>());
  if (family == "linear_jump")
    return YoungFunction::linear_jump(field(j, "t0", "young").get<double>());
  if (family == "piecewise_linear")
    return YoungFunction::piecewise_linear(
        number_array(field(j, "breaks", "young"), "young.breaks"),
        number_array(field(j, "slopes", "young"), "young.slopes"));
  if (family == "tabulated") {
    YoungFunction::Tail tail = YoungFunction::Tail::linear;
    if (j.contains("tail")) {
      const std::string t = j["tail"].get<std::string>();
      if (t == "jump")
        tail = YoungFunction::Tail::jump;
      else if (t != "linear")
        bad("young.tail", "expected 'linear' or 'jump'");
    }
    return YoungFunction::tabulated(number_array(field(j, "t", "young"), "young.t"),
                                    number_array(field(j, "y", "young"), "young.y"),
                                    tail);
  }
  bad("young.family", "unknown family '" + family + "'");
}

Json to_json(const RandomVariable& xi) {
  Json j;
  j["values"] = xi.values();
  return j;
}

RandomVariable rv_from_json(const Json& j, ProbSpacePtr space) {
  if (j.is_array()) return RandomVariable(std::move(space), number_array(j, "variable"));
  if (!j.is_object()) bad("variable", "expected an object or array");
  return RandomVariable(std::move(space),
                        number_array(field(j, "values", "variable"), "variable.values"));
}

Json to_json(const RNModule& module) {
  Json j;
  j["fiber_dim"] = module.fiber_dim();
  Json ps = Json::array();
  for (double p : module.fiber_exponents()) ps.push_back(exponent_to(p));
  j["fiber_p"] = std::move(ps);
  return j;
}

RNModulePtr module_from_json(const Json& j, ProbSpacePtr space) {
  if (!j.is_object()) bad("module", "expected an object");
  const auto& dim = field(j, "fiber_dim", "module");
  if (!dim.is_number_unsigned()) bad("module.fiber_dim", "expected a positive integer");
  const auto& ps = field(j, "fiber_p", "module");
  std::vector<double> exps;
  if (ps.is_array()) {
    for (const auto& e : ps) exps.push_back(exponent_from(e, "module.fiber_p"));
  } else {
    exps.assign(space->atom_count(), exponent_from(ps, "module.fiber_p"));
  }
  return make_module(std::move(space), dim.get<std::size_t>(), std::move(exps));
}

Json field_entries_to_json(const FiberField& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.atom_count(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < f.fiber_dim(); ++k) row.push_back(f(i, k));
    rows.push_back(std::move(row));
  }
  Json j;
  j["entries"] = std::move(rows);
  return j;
}

namespace {

std::vector<double> flat_entries(const Json& j, const RNModulePtr& module,
                                 const std::string& where) {
  const Json& rows = j.is_array() ? j : field(j, "entries", where);
  if (!rows.is_array() || rows.size() != module->atom_count())
    bad(where, "expected one row per atom");
  std::vector<double> flat;
  flat.reserve(module->atom_count() * module->fiber_dim());
  for (const auto& row : rows) {
    const auto vals = number_array(row, where + ".row");
    if (vals.size() != module->fiber_dim()) bad(where, "row width must be fiber_dim");
    flat.insert(flat.end(), vals.begin(), vals.end());
  }
  return flat;
}

}  // namespace

ModuleElement element_from_json(const Json& j, RNModulePtr module) {
  auto flat = flat_entries(j, module, "element");
  return ModuleElement(std::move(module), std::move(flat));
}

RandomFunctional functional_from_json(const Json& j, RNModulePtr module) {
  auto flat = flat_entries(j, module, "functional");
  return RandomFunctional(std::move(module), std::move(flat));
}

Json to_json(const BoundedAwayField& f) {
  Json j;
  j["values"] = f.values();
  j["cap"] = f.cap();
  j["lower_bound"] = f.lower_bound();
  return j;
}

BoundedAwayField bounded_away_from_json(const Json& j, ProbSpacePtr space) {
  if (!j.is_object()) bad("bounded_away", "expected an object");
  return BoundedAwayField(
      std::move(space),
      number_array(field(j, "values", "bounded_away"), "bounded_away.values"),
      field(j, "cap", "bounded_away").get<double>());
}

Json to_json(const YoungValidity& v) {
  Json j;
  j["valid"] = v.valid;
  j["violations"] = v.violations;
  return j;
}

Json to_json(const Membership& m) {
  Json j;
  j["in_l_phi"] = m.in_l_phi;
  j["in_m_phi"] = m.in_m_phi;
  return j;
}

Json to_json(const RnAxiomReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["violations"] = r.violations;
  return j;
}

Json to_json(const DensityReport& r) {
  Json j;
  j["n"] = r.n;
  j["distance"] = r.distance;
  j["distances"] = r.distances;
  return j;
}

Json to_json(const CauchyReport& r) {
  Json j;
  j["cauchy"] = r.cauchy;
  j["converges"] = r.converges;
  j["metric_cauchy"] = r.metric_cauchy;
  j["final_distance"] = r.final_distance;
  j["step_distances"] = r.step_distances;
  j["metric_distances"] = r.metric_distances;
  return j;
}

Json to_json(const RepresentReport& r) {
  Json j;
  j["f"] = field_entries_to_json(r.f);
  j["mu_singletons"] = r.mu_singletons;
  j["xi_x0"] = r.xi_x0;
  j["x_g"] = r.x_g;
  j["dual_norm_of_f"] = r.dual_norm_of_f;
  j["max_spanning_residual"] = r.max_spanning_residual;
  return j;
}

Json to_json(const IsometryReport& r) {
  Json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["flavor"] = r.flavor == NormFlavor::luxemburg ? "luxemburg" : "orlicz";
  j["pass"] = r.pass;
  j["witness_gap"] = r.witness_gap;
  return j;
}

Json to_json(const Counterexample& c) {
  Json j;
  j["x"] = c.x;
  j["y"] = c.y;
  j["norm_x"] = c.norm_x;
  j["norm_y"] = c.norm_y;
  j["midpoint_norm"] = c.midpoint_norm;
  j["separation"] = c.separation;
  return j;
}

Json to_json(const ConvexityVerdict& v) {
  Json j;
  j["status"] = v.status == ConvexityVerdict::Status::falsified ? "falsified"
                                                                : "verified-by-search";
  if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
  j["search_budget"] = v.search_budget;
  j["seed"] = v.seed;
  return j;
}

Json to_json(const RandomStrictConvexityReport& r) {
  Json atoms = Json::array();
  for (const auto& a : r.atoms) {
    Json e;
    e["atom"] = a.atom;
    e["verdict"] = to_json(a.verdict);
    e["analytic_strictly_convex"] = a.analytic_strictly_convex;
    e["agrees"] = a.agrees;
    atoms.push_back(std::move(e));
  }
  Json j;
  j["atoms"] = std::move(atoms);
  j["all_verified"] = r.all_verified;
  return j;
}

Json to_json(const ModulusEstimate& e) {
  Json j;
  j["epsilon"] = e.epsilon;
  j["delta"] = e.delta;
  j["pair_x"] = e.minimizing_pair.x;
  j["pair_y"] = e.minimizing_pair.y;
  j["budget_used"] = e.budget_used;
  return j;
}

Json to_json(const RandomModulusReport& r) {
  Json per = Json::array();
  for (const auto& e : r.per_atom) per.push_back(to_json(e));
  Json j;
  j["per_atom"] = std::move(per);
  j["infimum"] = r.infimum;
  j["uniformly_convex_by_estimate"] = r.uniformly_convex_by_estimate;
  if (r.delta_candidate) j["delta_candidate"] = to_json(*r.delta_candidate);
  return j;
}

Json to_json(const MonotonicityReport& r) {
  Json j;
  j["strict_expected"] = r.strict_expected;
  j["samples"] = r.samples;
  j["min_margin"] = r.min_margin;
  j["strict_violations"] = r.strict_violations;
  j["xi_at_min"] = r.xi_at_min;
  j["eta_at_min"] = r.eta_at_min;
  return j;
}

Json to_json(const StrictEquivalenceReport& r) {
  Json j;
  j["scalar"] = to_json(r.scalar);
  j["fibers"] = to_json(r.fibers);
  j["composite"] = to_json(r.composite);
  j["consistent"] = r.consistent;
  if (r.fiber_lift) j["fiber_lift"] = to_json(*r.fiber_lift);
  if (r.scalar_lift) j["scalar_lift"] = to_json(*r.scalar_lift);
  j["lifts_valid"] = r.lifts_valid;
  return j;
}

Json to_json(const ModulusImplicationReport& r) {
  Json per = Json::array();
  for (const auto& e : r.per_fiber) per.push_back(to_json(e));
  Json j;
  j["epsilon"] = r.epsilon;
  j["scalar"] = to_json(r.scalar);
  j["per_fiber"] = std::move(per);
  j["composite"] = to_json(r.composite);
  j["fiber_min"] = r.fiber_min;
  j["contradiction"] = r.contradiction;
  return j;
}

Json to_json(const std::vector<ModulusSurveyRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["epsilon"] = r.epsilon;
    e["scalar_delta"] = r.scalar_delta;
    e["fiber_min_delta"] = r.fiber_min_delta;
    e["composite_delta"] = r.composite_delta;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace orlicz
