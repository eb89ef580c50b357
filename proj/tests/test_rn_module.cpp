#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/rn_module.hpp"

using namespace orlicz;

TEST_SUITE("rn_module") {

TEST_CASE("fiber norms on the (3, 4) vector") {
  const auto s = uniform_space(1);
  const std::vector<double> v{3.0, 4.0};
  CHECK(make_module(s, 2, 2.0)->fiber_norm(0, v) == doctest::Approx(5.0));
  CHECK(make_module(s, 2, 1.0)->fiber_norm(0, v) == doctest::Approx(7.0));
  CHECK(make_module(s, 2, kInf)->fiber_norm(0, v) == doctest::Approx(4.0));
  CHECK(make_module(s, 2, 3.0)->fiber_norm(0, v) ==
        doctest::Approx(std::pow(27.0 + 64.0, 1.0 / 3.0)));
}

TEST_CASE("module construction guards the exponents") {
  const auto s = uniform_space(2);
  CHECK_THROWS_AS(make_module(s, 2, 0.5), ArgumentError);
  CHECK_THROWS_AS(make_module(s, 0, 2.0), ArgumentError);
  CHECK_THROWS_AS(make_module(s, 2, std::vector<double>{2.0}), DimensionError);
  CHECK_NOTHROW((void)RNModule::unchecked(s, 2, {0.5, 0.5}));  // research escape hatch
}

TEST_CASE("dual exponents pair up") {
  const auto s = uniform_space(3);
  const auto mod = make_module(s, 2, std::vector<double>{1.0, 2.0, kInf});
  CHECK(mod->dual_exponent(0) == kInf);
  CHECK(mod->dual_exponent(1) == doctest::Approx(2.0));
  CHECK(mod->dual_exponent(2) == doctest::Approx(1.0));
  const auto m3 = make_module(s, 2, 3.0);
  CHECK(m3->dual_exponent(0) == doctest::Approx(1.5));
}

TEST_CASE("random_norm is the atomwise fiber norm") {
  const auto s = make_space({0.5, 0.5});
  const auto mod = make_module(s, 2, 2.0);
  const ModuleElement x(mod, {3.0, 4.0, 0.0, 0.0});
  const RandomVariable n = random_norm(x);
  CHECK(n[0] == doctest::Approx(5.0));
  CHECK(n[1] == 0.0);
}

TEST_CASE("module arithmetic and scaling by a random variable") {
  const auto s = uniform_space(2);
  const auto mod = make_module(s, 2, 2.0);
  const ModuleElement x(mod, {1.0, 2.0, 3.0, 4.0});
  const ModuleElement y(mod, {1.0, 1.0, 1.0, 1.0});
  const ModuleElement sum = x + y;
  CHECK(sum(1, 1) == doctest::Approx(5.0));
  const RandomVariable xi(s, {2.0, -1.0});
  const ModuleElement sx = scale_by(xi, x);
  CHECK(sx(0, 1) == doctest::Approx(4.0));
  CHECK(sx(1, 0) == doctest::Approx(-3.0));
}

TEST_CASE("axioms hold for legal exponents") {
  const auto s = make_space({0.25, 0.75});
  const auto mod = make_module(s, 3, std::vector<double>{1.0, 2.5});
  const auto report = validate_rn_axioms(mod, 64, 5);
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("sub-one exponent breaks the triangle inequality only") {
  const auto s = uniform_space(2);
  const auto mod =
      std::make_shared<const RNModule>(RNModule::unchecked(s, 2, {0.5, 0.5}));
  const auto report = validate_rn_axioms(mod, 128, 5);
  CHECK(!report.ok);
  bool triangle = false, homogeneity = false;
  for (const auto& v : report.violations) {
    if (v.find("triangle") != std::string::npos) triangle = true;
    if (v.find("homogeneity") != std::string::npos) homogeneity = true;
  }
  CHECK(triangle);
  CHECK(!homogeneity);  // |xi| scaling survives any positive exponent
}

TEST_CASE("b_set collects the atoms where both sides act") {
  const auto s = uniform_space(3);
  const auto mod = make_module(s, 1, 2.0);
  const ModuleElement x(mod, {1.0, 2.0, 0.0});
  const ModuleElement y(mod, {1.0, 1.0, 1.0});
  const EventClass b = b_set(x, y);
  CHECK(b.contains(1));
  CHECK(!b.contains(2));  // x vanishes there
  CHECK(!b.contains(0));  // x - y vanishes there
}

TEST_CASE("normalize_to_sphere lands on the unit sphere of each live fiber") {
  const auto s = uniform_space(2);
  const auto mod = make_module(s, 2, 2.0);
  const ModuleElement x(mod, {3.0, 4.0, 0.0, 0.0});
  const ModuleElement u = normalize_to_sphere(x);
  CHECK(random_norm(u)[0] == doctest::Approx(1.0));
  CHECK(random_norm(u)[1] == 0.0);
  CHECK_THROWS_AS(normalize_to_sphere(ModuleElement::zero(mod)), ArgumentError);
}

TEST_CASE("dual random norm flips the exponent") {
  const auto s = uniform_space(1);
  const auto mod = make_module(s, 2, 1.0);
  const RandomFunctional f(mod, {3.0, 4.0});
  CHECK(dual_random_norm(f)[0] == doctest::Approx(4.0));  // sup-norm of (3, 4)
  const auto m2 = make_module(s, 2, 2.0);
  const RandomFunctional g(m2, {3.0, 4.0});
  CHECK(dual_random_norm(g)[0] == doctest::Approx(5.0));
}

TEST_CASE("dual norm agrees with the sampled oracle") {
  const auto s = make_space({0.5, 0.5});
  for (double p : {1.0, 1.7, 2.0, 3.0, kInf}) {
    const auto mod = make_module(s, 3, p);
    const RandomFunctional f(mod, {1.0, -2.0, 0.5, 0.0, 1.0, -1.0});
    const RandomVariable fast = dual_random_norm(f);
    const RandomVariable slow = dual_norm_oracle(f, 20000, 3);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-6));
  }
}

TEST_CASE("norming field on a sup-norm fiber is the sign pattern") {
  const auto s = uniform_space(1);
  const auto mod = make_module(s, 2, kInf);
  const RandomFunctional f(mod, {3.0, -4.0});
  const ModuleElement u = norming_field(f);
  CHECK(u(0, 0) == doctest::Approx(1.0));
  CHECK(u(0, 1) == doctest::Approx(-1.0));
  CHECK(expectation(apply_functional(f, u)) == doctest::Approx(7.0));
}

TEST_CASE("norming field on a sum-norm fiber breaks ties low") {
  const auto s = uniform_space(1);
  const auto mod = make_module(s, 2, 1.0);
  const RandomFunctional f(mod, {3.0, 3.0});
  const ModuleElement u = norming_field(f);
  CHECK(u(0, 0) == doctest::Approx(1.0));
  CHECK(u(0, 1) == 0.0);
  CHECK(expectation(apply_functional(f, u)) == doctest::Approx(3.0));
}

TEST_CASE("norming field attains the dual norm for smooth exponents") {
  const auto s = make_space({0.25, 0.75});
  const auto mod = make_module(s, 3, 2.5);
  const RandomFunctional f(mod, {1.0, -2.0, 0.5, 3.0, 0.0, -1.0});
  const ModuleElement u = norming_field(f);
  const RandomVariable pairing = apply_functional(f, u);
  const RandomVariable want = dual_random_norm(f);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(random_norm(u)[i] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(pairing[i] == doctest::Approx(want[i]).epsilon(1e-10));
  }
}

TEST_CASE("bounded-away fields keep their floor and cap") {
  const auto s = uniform_space(2);
  const auto f = BoundedAwayField::constant(s, 0.5, 2.0);
  CHECK(f[0] == 0.5);
  CHECK(f.lower_bound() == doctest::Approx(0.5));
  CHECK_THROWS_AS(BoundedAwayField(s, {0.0, 0.5}, 2.0), ArgumentError);
  CHECK_THROWS_AS(BoundedAwayField(s, {0.5, 0.5}, 3.0), ArgumentError);
}

TEST_CASE("full support indicator is a unit field everywhere") {
  const auto s = uniform_space(3);
  const auto mod = make_module(s, 2, std::vector<double>{1.0, 2.0, kInf});
  const FullSupport fs = full_support_indicator(mod);
  CHECK(fs.atoms.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(random_norm(fs.unit_field)[i] == doctest::Approx(1.0));
}

TEST_CASE("mixing modules is rejected") {
  const auto s = uniform_space(2);
  const auto a = make_module(s, 2, 2.0);
  const auto b = make_module(s, 2, 1.0);
  const ModuleElement x(a, {1.0, 0.0, 0.0, 1.0});
  const ModuleElement y(b, {1.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS(x + y, DimensionError);
}

}  // TEST_SUITE
