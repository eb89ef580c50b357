#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "orlicz/json_io.hpp"

namespace orlicz {

struct Budgets {
  long long falsifier = 20000;  // candidate pairs per convexity search
  long long modulus = 50000;    // candidate pairs per modulus estimate
  int ascent = 500;             // steps per operator-norm start
  int samples = 200;            // sampled-identity checks
};

// One self-contained problem instance: the space, the Young pair, the
// module and the named inputs every subcommand draws from.
class Scenario {
public:
  static Scenario from_json(const Json& j);
  static Scenario from_file(const std::string& path);

  ProbSpacePtr space;
  std::optional<YoungFunction> phi;
  std::optional<YoungFunction> psi;  // optional supplied conjugate, cross-checked
  RNModulePtr module;                // null when the scenario is scalar-only
  std::map<std::string, RandomVariable> scalars;
  std::map<std::string, ModuleElement> elements;
  std::map<std::string, RandomFunctional> functionals;
  std::uint64_t seed = 1;
  Budgets budgets;
  std::string hash;  // of the canonical serialized form

  // Builders with argument checks and readable messages.
  OrliczContext context() const;
  ModuleOrliczContext module_context() const;
  const RandomVariable& scalar(const std::string& name) const;
  const ModuleElement& element(const std::string& name) const;
  const RandomFunctional& functional(const std::string& name) const;
};

}  // namespace orlicz
