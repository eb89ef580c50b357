#include <doctest.h>

#include <cmath>
#include <vector>

#include "orlicz/duality.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/errors.hpp"

using namespace orlicz;

namespace {

ModuleOrliczContext make_ctx(double p_young, double p_fiber, std::size_t m,
                             std::size_t n) {
  const auto s = uniform_space(m);
  return ModuleOrliczContext(OrliczContext(YoungFunction::power(p_young), s),
                             make_module(s, n, p_fiber));
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("embedding evaluates the expected pairing") {
  const auto mctx = make_ctx(2.0, 2.0, 2, 2);
  const RandomFunctional f(mctx.module(), {3.0, 4.0, 0.0, 0.0});
  const EmbeddedFunctional tf = embed(f, mctx);
  const ModuleElement x(mctx.module(), {1.0, 1.0, 2.0, 2.0});
  // E[<x, f>] = 0.5 * (3 + 4) + 0.5 * 0 = 3.5.
  CHECK(tf(x) == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("operator norm equals the conjugate norm on the square case") {
  const auto mctx = make_ctx(2.0, 2.0, 2, 2);
  const RandomFunctional f(mctx.module(), {3.0, 4.0, 0.0, 0.0});
  const IsometryReport rep = isometry_check(f, mctx, NormFlavor::luxemburg, 500, 11);
  // ||f||* = (5, 0); conjugate is s^2/4, whose amemiya norm is the 2-mean.
  CHECK(rep.rhs == doctest::Approx(std::sqrt(12.5)).epsilon(1e-9));
  CHECK(rep.pass);
  CHECK(std::fabs(rep.lhs - rep.rhs) <= 1e-4 * std::max(rep.rhs, 1.0));
}

TEST_CASE("both flavors pass on a mixed-fiber module") {
  const auto s = make_space({0.25, 0.25, 0.5});
  const ModuleOrliczContext mctx(
      OrliczContext(YoungFunction::power(1.5), s),
      make_module(s, 2, std::vector<double>{1.0, 2.0, kInf}));
  const RandomFunctional f(mctx.module(), {1.0, -2.0, 0.5, 1.5, -1.0, 2.0});
  for (const auto flavor : {NormFlavor::luxemburg, NormFlavor::orlicz}) {
    const IsometryReport rep = isometry_check(f, mctx, flavor, 600, 13);
    CHECK(rep.pass);
  }
}

TEST_CASE("zero functional is trivially isometric") {
  const auto mctx = make_ctx(2.0, 2.0, 2, 2);
  const RandomFunctional f = RandomFunctional::zero(mctx.module());
  const IsometryReport rep = isometry_check(f, mctx, NormFlavor::luxemburg);
  CHECK(rep.pass);
  CHECK(rep.lhs == 0.0);
  CHECK(rep.rhs == 0.0);
}

TEST_CASE("witness element nearly attains the operator norm") {
  const auto mctx = make_ctx(2.0, 2.0, 2, 2);
  const RandomFunctional f(mctx.module(), {3.0, 4.0, 1.0, 0.0});
  const EmbeddedFunctional tf = embed(f, mctx);
  for (const auto flavor : {NormFlavor::luxemburg, NormFlavor::orlicz}) {
    const ModuleElement xs = witness_element(f, mctx, flavor, 1e-6);
    const double nx = module_norm(mctx, xs, flavor);
    CHECK(nx <= 1.0 + 1e-5);
    const double rhs = scalar_norm(mctx.ctx().swapped(), dual_random_norm(f),
                                   flavor == NormFlavor::luxemburg
                                       ? NormFlavor::orlicz
                                       : NormFlavor::luxemburg);
    CHECK(std::fabs(tf(xs)) >= rhs - 1e-4 * std::max(rhs, 1.0));
  }
  CHECK_THROWS_AS(
      witness_element(RandomFunctional::zero(mctx.module()), mctx,
                      NormFlavor::luxemburg, 1e-6),
      ArgumentError);
}

TEST_CASE("represent recovers the kernel exactly") {
  const auto mctx = make_ctx(2.0, 2.0, 2, 2);
  const RandomFunctional f(mctx.module(), {3.0, -4.0, 1.0, 2.0});
  const EmbeddedFunctional tf = embed(f, mctx);
  const RepresentReport rep =
      represent([&](const ModuleElement& x) { return tf(x); }, mctx, 7);
  for (std::size_t i = 0; i < f.flat().size(); ++i)
    CHECK(rep.f.flat()[i] == doctest::Approx(f.flat()[i]).epsilon(1e-12));
  CHECK(rep.max_spanning_residual <= 1e-9);
  for (std::size_t i = 0; i < rep.x_g.size(); ++i)
    CHECK(rep.x_g[i] == doctest::Approx(rep.dual_norm_of_f[i]).epsilon(1e-12));
}

TEST_CASE("represent rejects a nonlinear black box") {
  const auto mctx = make_ctx(2.0, 2.0, 2, 2);
  CHECK_THROWS_AS(
      represent([&](const ModuleElement& x) {
        return module_norm(mctx, x, NormFlavor::luxemburg);
      }, mctx, 7),
      PreconditionError);
}

TEST_CASE("embedding rejects a functional from another module") {
  const auto mctx = make_ctx(2.0, 2.0, 2, 2);
  const auto other = make_module(uniform_space(3), 2, 2.0);
  const RandomFunctional f(other, {1.0, 0.0, 0.0, 1.0, 1.0, 1.0});
  CHECK_THROWS_AS(embed(f, mctx), DimensionError);
}

}  // TEST_SUITE
