#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "orlicz/errors.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/scenario.hpp"

using namespace orlicz;

namespace {

const char* kScenarioText = R"({
  "space": {"weights": [0.5, 0.5]},
  "phi": {"family": "power", "p": 2},
  "module": {"fiber_dim": 2, "fiber_p": 2},
  "scalars": {"xi": [2, 0]},
  "elements": {"x": {"entries": [[3, 4], [0, 0]]}},
  "functionals": {"f": {"entries": [[3, 4], [0, 0]]}},
  "seed": 7,
  "budgets": {"falsifier": 1000}
})";

Scenario parse_text(const std::string& text) {
  return Scenario::from_json(Json::parse(text));
}

}  // namespace

TEST_SUITE("scenario_io") {

TEST_CASE("full scenario parses into live objects") {
  const Scenario sc = parse_text(kScenarioText);
  CHECK(sc.space->atom_count() == 2);
  CHECK(sc.seed == 7);
  CHECK(sc.budgets.falsifier == 1000);
  CHECK(sc.budgets.modulus == Budgets{}.modulus);  // untouched default
  REQUIRE(sc.module);
  CHECK(sc.module->fiber_dim() == 2);
  CHECK(sc.scalar("xi")[0] == 2.0);
  CHECK(sc.element("x")(0, 1) == 4.0);
  CHECK(sc.functional("f")(0, 0) == 3.0);
  CHECK(module_norm(sc.module_context(), sc.element("x"), NormFlavor::luxemburg) ==
        doctest::Approx(std::sqrt(12.5)));
}

TEST_CASE("unique entries are reachable without a name") {
  const Scenario sc = parse_text(kScenarioText);
  CHECK(sc.scalar("")[0] == 2.0);
  CHECK(sc.element("")(0, 0) == 3.0);
}

TEST_CASE("missing names point at the flag") {
  const Scenario sc = parse_text(kScenarioText);
  try {
    (void)sc.scalar("nope");
    FAIL("expected an argument error");
  } catch (const ArgumentError& e) {
    const std::string what = e.what();
    CHECK(what.find("--name") != std::string::npos);
    CHECK(what.find("'xi'") != std::string::npos);  // lists what exists
  }
}

TEST_CASE("scenario hash is stable and input-sensitive") {
  const Scenario a = parse_text(kScenarioText);
  const Scenario b = parse_text(kScenarioText);
  CHECK(a.hash == b.hash);
  std::string other = kScenarioText;
  other.replace(other.find("\"seed\": 7"), 9, "\"seed\": 8");
  CHECK(parse_text(other).hash != a.hash);
}

TEST_CASE("young functions round-trip through json") {
  for (const auto& phi :
       {YoungFunction::power(2.5), YoungFunction::scaled_power(0.25, 2.0),
        YoungFunction::linear_jump(1.5),
        YoungFunction::piecewise_linear({1.0}, {1.0, 3.0})}) {
    const YoungFunction back = young_from_json(to_json(phi));
    for (double t : {0.0, 0.5, 1.0, 1.4, 3.0}) CHECK(phi(t) == back(t));
  }
}

TEST_CASE("modules accept atomwise exponent lists") {
  Json j = Json::parse(kScenarioText);
  j["module"]["fiber_p"] = Json::array({1.0, "inf"});
  const Scenario sc = Scenario::from_json(j);
  CHECK(sc.module->fiber_p(0) == 1.0);
  CHECK(sc.module->fiber_p(1) == kInf);
}

TEST_CASE("malformed blocks fail loudly") {
  Json j = Json::parse(kScenarioText);
  j.erase("space");
  CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);

  Json bad_young = Json::parse(kScenarioText);
  bad_young["phi"] = {{"family", "mystery"}};
  CHECK_THROWS_AS(Scenario::from_json(bad_young), ValidationError);

  Json bad_rows = Json::parse(kScenarioText);
  bad_rows["elements"]["x"]["entries"] = Json::array({Json::array({1.0})});
  CHECK_THROWS_AS(Scenario::from_json(bad_rows), ValidationError);
}

TEST_CASE("file loading reports the path on failure") {
  try {
    (void)Scenario::from_file("/nonexistent/scenario.json");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/scenario.json") !=
          std::string::npos);
  }

  const std::string path = "bad_scenario_tmp.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(Scenario::from_file(path), ValidationError);
  std::remove(path.c_str());
}

TEST_CASE("report serialization keeps infinities readable") {
  const auto mod = make_module(uniform_space(1), 2, kInf);
  const Json j = to_json(*mod);
  CHECK(j["fiber_p"][0] == "inf");
}

}  // TEST_SUITE
