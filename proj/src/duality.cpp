#include "orlicz/duality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

// Indicator field of a single atom times a basis direction.
ModuleElement atom_basis_field(const RNModulePtr& module, std::size_t atom,
                               std::size_t coord) {
  std::vector<double> v = FiberField::zero_data(module);
  v[atom * module->fiber_dim() + coord] = 1.0;
  return ModuleElement(module, std::move(v));
}

}  // namespace

EmbeddedFunctional::EmbeddedFunctional(RandomFunctional f, ModuleOrliczContext mctx)
    : f_(std::move(f)), mctx_(std::move(mctx)) {
  if (f_.module() != mctx_.module() &&
      !(same_space(f_.module()->space(), mctx_.module()->space()) &&
        f_.module()->fiber_dim() == mctx_.module()->fiber_dim()))
    throw DimensionError("EmbeddedFunctional: f lives on another module");
  // Admissibility: the dual random norm must lie in the conjugate space.
  const Membership mem = membership(mctx_.ctx().swapped(), dual_random_norm(f_));
  if (!mem.in_l_phi)
    throw PreconditionError(
        "EmbeddedFunctional: ||f||* escapes the conjugate space");
}

double EmbeddedFunctional::operator()(const ModuleElement& x) const {
  return expectation(apply_functional(f_, x));
}

EmbeddedFunctional embed(RandomFunctional f, ModuleOrliczContext mctx) {
  return EmbeddedFunctional(std::move(f), std::move(mctx));
}

double operator_norm(const EmbeddedFunctional& tf, NormFlavor flavor, int budget,
                     std::uint64_t seed) {
  const RNModulePtr& module = tf.mctx().module();
  const std::size_t m = module->atom_count();
  const std::size_t n = module->fiber_dim();
  if (tf.f().is_zero()) return 0.0;

  // Ratio objective |Tf(x)| / ||x||: scale-free, so any nonzero x yields a
  // valid lower bound after radial normalization.
  const auto score = [&](const ModuleElement& x) {
    if (x.is_zero()) return 0.0;
    const double nx = module_norm(tf.mctx(), x, flavor);
    if (!(nx > 0.0) || !std::isfinite(nx)) return 0.0;
    return std::fabs(tf(x)) / nx;
  };

  double best = 0.0;
  Rng rng(seed);
  const int starts = 16;
  const int steps = std::max(1, budget);
  for (int s = 0; s < starts; ++s) {
    std::vector<double> v(m * n);
    if (s == 0) {
      // Aligned start: the norming field itself.
      v = norming_field(tf.f()).flat();
      bool zero = true;
      for (double e : v) zero = zero && e == 0.0;
      if (zero) v.assign(m * n, 1.0);
    } else {
      for (double& e : v) e = rng.normal();
    }
    ModuleElement x(module, std::move(v));
    double cur = score(x);
    best = std::max(best, cur);

    double step = 0.5;
    int stale = 0;
    for (int it = 0; it < steps && step > 1e-12; ++it) {
      std::vector<double> w = x.flat();
      const std::size_t idx = rng.index(w.size());
      w[idx] += step * (rng.uniform() < 0.5 ? 1.0 : -1.0) *
                std::max(1.0, std::fabs(w[idx]));
      ModuleElement y(module, std::move(w));
      const double sy = score(y);
      if (sy > cur * (1.0 + 1e-14)) {
        x = std::move(y);
        cur = sy;
        best = std::max(best, cur);
        stale = 0;
      } else if (++stale >= 16) {
        step *= 0.5;
        stale = 0;
      }
    }
  }
  return best;
}

ModuleElement witness_element(const RandomFunctional& f,
                              const ModuleOrliczContext& mctx, NormFlavor flavor,
                              double tol) {
  if (f.is_zero())
    throw ArgumentError("witness_element: the zero functional has no witness");
  if (!(tol > 0.0)) throw ArgumentError("witness_element: tolerance must be positive");

  const RandomVariable fstar = dual_random_norm(f);
  // The scalar extremal multiplies the norming field. Under the Luxemburg
  // module norm the multiplier must sit in the base Luxemburg ball and
  // attain the conjugate Orlicz norm of ||f||*; under the Orlicz module
  // norm, the base Orlicz ball and the conjugate Luxemburg norm. Both come
  // from the scalar layer run in the swapped context, where phi and psi
  // trade places.
  const OrliczContext dual_ctx = mctx.ctx().swapped();
  const RandomVariable xi = flavor == NormFlavor::luxemburg
                                ? pairing_witness(dual_ctx, fstar)
                                : orlicz_ball_witness(dual_ctx, fstar);
  return scale_by(xi, norming_field(f));
}

RepresentReport represent(const std::function<double(const ModuleElement&)>& bigF,
                          const ModuleOrliczContext& mctx, std::uint64_t seed) {
  const RNModulePtr& module = mctx.module();
  const std::size_t m = module->atom_count();
  const std::size_t n = module->fiber_dim();
  const ProbSpace& space = *module->space();

  // Linearity screen on sampled pairs before trusting the black box.
  Rng rng(seed);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<double> a(m * n), b(m * n);
    for (double& e : a) e = rng.normal();
    for (double& e : b) e = rng.normal();
    const double c1 = 2.0 * rng.normal();
    const double c2 = 2.0 * rng.normal();
    ModuleElement xa(module, a);
    ModuleElement xb(module, b);
    const double lhs = bigF(c1 * xa + c2 * xb);
    const double rhs = c1 * bigF(xa) + c2 * bigF(xb);
    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    if (std::fabs(lhs - rhs) > 1e-10 * scale) {
      std::ostringstream os;
      os << "represent: functional is not linear; F(" << c1 << " a + " << c2
         << " b) = " << lhs << " but " << c1 << " F(a) + " << c2 << " F(b) = " << rhs;
      throw PreconditionError(os.str());
    }
  }

  RepresentReport out{RandomFunctional::zero(module), {}, {}, {}, {}, 0.0};

  // The vector measure of the construction, evaluated on singletons with
  // the canonical unit field, and its density.
  const ModuleElement x0 = full_support_indicator(module).unit_field;
  out.mu_singletons.resize(m);
  out.xi_x0.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> v = FiberField::zero_data(module);
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = x0(i, j);
    out.mu_singletons[i] = bigF(ModuleElement(module, std::move(v)));
    out.xi_x0[i] = out.mu_singletons[i] / space.weight(i);
  }

  // Coefficient recovery, one atom-basis probe per entry.
  std::vector<double> coeff(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      coeff[i * n + j] = bigF(atom_basis_field(module, i, j)) / space.weight(i);
  out.f = RandomFunctional(module, std::move(coeff));

  const RandomVariable fstar = dual_random_norm(out.f);
  out.dual_norm_of_f.assign(fstar.values().begin(), fstar.values().end());

  // X_g: the atomwise sup of |g| over unit elements, evaluated through the
  // black box at the norming field plus sampled unit fibers. g(x)(omega) is
  // recovered from singleton probes: F(I_omega x) / p_omega.
  const auto g_at = [&](const ModuleElement& x, std::size_t atom) {
    std::vector<double> v = FiberField::zero_data(module);
    for (std::size_t j = 0; j < n; ++j) v[atom * n + j] = x(atom, j);
    return bigF(ModuleElement(module, std::move(v))) / space.weight(atom);
  };
  out.x_g.assign(m, 0.0);
  const ModuleElement aligned = norming_field(out.f);
  for (std::size_t i = 0; i < m; ++i) {
    if (module->fiber_norm(i, aligned.fiber(i)) > 0.0)
      out.x_g[i] = std::max(out.x_g[i], std::fabs(g_at(aligned, i)));
    for (int s = 0; s < 32; ++s) {
      std::vector<double> v = FiberField::zero_data(module);
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = rng.normal();
      ModuleElement probe(module, std::move(v));
      const double nrm = module->fiber_norm(i, probe.fiber(i));
      if (!(nrm > 0.0)) continue;
      probe = (1.0 / nrm) * probe;
      out.x_g[i] = std::max(out.x_g[i], std::fabs(g_at(probe, i)));
    }
  }

  // Spanning residual: T(f) must reproduce F on the atom-basis fields.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ModuleElement b = atom_basis_field(module, i, j);
      const double via_f = expectation(apply_functional(out.f, b));
      out.max_spanning_residual =
          std::max(out.max_spanning_residual, std::fabs(bigF(b) - via_f));
    }
  return out;
}

IsometryReport isometry_check(const RandomFunctional& f,
                              const ModuleOrliczContext& mctx, NormFlavor flavor,
                              int budget, std::uint64_t seed) {
  IsometryReport out;
  out.flavor = flavor;
  if (f.is_zero()) {
    out.pass = true;
    return out;
  }

  const EmbeddedFunctional tf = embed(f, mctx);
  const RandomVariable fstar = dual_random_norm(f);
  // The conjugate norm on the other side swaps flavor: the dual of the
  // Luxemburg ball carries the conjugate Orlicz norm and conversely.
  const NormFlavor dual_flavor = flavor == NormFlavor::luxemburg
                                     ? NormFlavor::orlicz
                                     : NormFlavor::luxemburg;
  out.rhs = scalar_norm(mctx.ctx().swapped(), fstar, dual_flavor);

  const double ascent = operator_norm(tf, flavor, budget, seed);
  const ModuleElement xstar = witness_element(f, mctx, flavor, 1e-6);
  const double nx = module_norm(mctx, xstar, flavor);
  double witness_pairing = 0.0;
  if (nx > 0.0 && std::isfinite(nx))
    witness_pairing = std::fabs(tf(xstar)) / std::max(1.0, nx);
  out.lhs = std::max(ascent, witness_pairing);
  out.witness_gap = out.rhs - witness_pairing;
  out.pass = std::fabs(out.lhs - out.rhs) <= 1e-4 * std::max(out.rhs, 1.0);
  return out;
}

}  // namespace orlicz
