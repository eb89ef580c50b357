#include "orlicz/scenario.hpp"

#include <fstream>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

template <typename Map>
const typename Map::mapped_type& pick(const Map& map, const std::string& name,
                                      const char* kind) {
  if (map.empty())
    throw ArgumentError(std::string("scenario: no ") + kind + " entries defined");
  if (name.empty()) {
    if (map.size() == 1) return map.begin()->second;
    throw ArgumentError(std::string("scenario: several ") + kind +
                        " entries; pass --name");
  }
  const auto it = map.find(name);
  if (it == map.end()) {
    std::string names;
    for (const auto& entry : map) {
      if (!names.empty()) names += ", ";
      names += "'" + entry.first + "'";
    }
    throw ArgumentError(std::string("scenario: no ") + kind + " named '" + name +
                        "'; --name must be one of " + names);
  }
  return it->second;
}

}  // namespace

Scenario Scenario::from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("scenario: expected a JSON object");
  Scenario s;
  if (!j.contains("space")) throw ValidationError("scenario: missing 'space'");
  s.space = space_from_json(j["space"]);
  if (j.contains("phi")) s.phi = young_from_json(j["phi"]);
  if (j.contains("psi")) s.psi = young_from_json(j["psi"]);
  if (j.contains("module")) s.module = module_from_json(j["module"], s.space);

  if (j.contains("scalars")) {
    if (!j["scalars"].is_object())
      throw ValidationError("scenario.scalars: expected an object of named arrays");
    for (const auto& [name, val] : j["scalars"].items())
      s.scalars.emplace(name, rv_from_json(val, s.space));
  }
  const auto need_module = [&](const char* what) {
    if (!s.module)
      throw ValidationError(std::string("scenario.") + what +
                            ": requires a 'module' block");
  };
  if (j.contains("elements")) {
    need_module("elements");
    if (!j["elements"].is_object())
      throw ValidationError("scenario.elements: expected an object");
    for (const auto& [name, val] : j["elements"].items())
      s.elements.emplace(name, element_from_json(val, s.module));
  }
  if (j.contains("functionals")) {
    need_module("functionals");
    if (!j["functionals"].is_object())
      throw ValidationError("scenario.functionals: expected an object");
    for (const auto& [name, val] : j["functionals"].items())
      s.functionals.emplace(name, functional_from_json(val, s.module));
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      throw ValidationError("scenario.seed: expected an integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (!b.is_object()) throw ValidationError("scenario.budgets: expected an object");
    if (b.contains("falsifier")) s.budgets.falsifier = b["falsifier"].get<long long>();
    if (b.contains("modulus")) s.budgets.modulus = b["modulus"].get<long long>();
    if (b.contains("ascent")) s.budgets.ascent = b["ascent"].get<int>();
    if (b.contains("samples")) s.budgets.samples = b["samples"].get<int>();
  }
  s.hash = fnv1a_hex(j.dump());
  return s;
}

Scenario Scenario::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("scenario: cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    std::ostringstream os;
    os << "scenario '" << path << "': parse error at byte " << e.byte << ": "
       << e.what();
    throw ValidationError(os.str());
  }
  return from_json(j);
}

OrliczContext Scenario::context() const {
  if (!phi) throw ArgumentError("scenario: this command needs a 'phi' block");
  if (psi) return OrliczContext(*phi, *psi, space);
  return OrliczContext(*phi, space);
}

ModuleOrliczContext Scenario::module_context() const {
  if (!module) throw ArgumentError("scenario: this command needs a 'module' block");
  return ModuleOrliczContext(context(), module);
}

const RandomVariable& Scenario::scalar(const std::string& name) const {
  return pick(scalars, name, "scalar");
}

const ModuleElement& Scenario::element(const std::string& name) const {
  return pick(elements, name, "element");
}

const RandomFunctional& Scenario::functional(const std::string& name) const {
  return pick(functionals, name, "functional");
}

}  // namespace orlicz
