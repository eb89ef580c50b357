#pragma once

#include <json.hpp>

#include "orlicz/convexity.hpp"
#include "orlicz/duality.hpp"
#include "orlicz/orlicz_module.hpp"

namespace orlicz {

using Json = nlohmann::json;

// Serialization of the core value types. The emitted objects round trip
// through the paired from_json readers; every reader validates and throws
// ValidationError with a location string on malformed input.
Json to_json(const ProbSpace& space);
ProbSpacePtr space_from_json(const Json& j);

Json to_json(const YoungFunction& phi);
YoungFunction young_from_json(const Json& j);

Json to_json(const RandomVariable& xi);
RandomVariable rv_from_json(const Json& j, ProbSpacePtr space);

Json to_json(const RNModule& module);
RNModulePtr module_from_json(const Json& j, ProbSpacePtr space);

Json field_entries_to_json(const FiberField& field);
ModuleElement element_from_json(const Json& j, RNModulePtr module);
RandomFunctional functional_from_json(const Json& j, RNModulePtr module);

Json to_json(const BoundedAwayField& field);
BoundedAwayField bounded_away_from_json(const Json& j, ProbSpacePtr space);

// Report emitters (one way; reports are outputs).
Json to_json(const YoungValidity& v);
Json to_json(const Membership& m);
Json to_json(const RnAxiomReport& r);
Json to_json(const DensityReport& r);
Json to_json(const CauchyReport& r);
Json to_json(const RepresentReport& r);
Json to_json(const IsometryReport& r);
Json to_json(const Counterexample& c);
Json to_json(const ConvexityVerdict& v);
Json to_json(const RandomStrictConvexityReport& r);
Json to_json(const ModulusEstimate& e);
Json to_json(const RandomModulusReport& r);
Json to_json(const MonotonicityReport& r);
Json to_json(const StrictEquivalenceReport& r);
Json to_json(const ModulusImplicationReport& r);
Json to_json(const std::vector<ModulusSurveyRow>& rows);

}  // namespace orlicz
