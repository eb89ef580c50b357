#include "orlicz/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

constexpr double kMidpointBar = 1.0 - 1e-9;  // flat-spot threshold
constexpr double kSepFloor = 1e-3;           // search-internal pair separation

std::vector<double> vsub(std::span<const double> a, std::span<const double> b) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return v;
}

std::vector<double> vmid(std::span<const double> a, std::span<const double> b) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 * (a[i] + b[i]);
  return v;
}

std::vector<double> vneg(std::span<const double> a) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a[i];
  return v;
}

bool normalize_in(const NormedSpace& space, std::vector<double>& v) {
  const double n = space.norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) return false;
  for (double& e : v) e /= n;
  return true;
}

std::uint64_t salt_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed ^ (0x9E3779B97F4A7C15ull * (salt + 1));
}

// Strict convexity of the scalar geometry induced by a Young function: the
// power families with exponent above one give L^p-type balls; everything
// else is either flat (exponent one, jumps) or unclassified.
std::optional<bool> young_strictness(const YoungFunction& phi, std::size_t dim) {
  if (dim <= 1) return true;
  switch (phi.form()) {
    case YoungFunction::Form::power:
    case YoungFunction::Form::scaled_power:
      return phi.power_exponent() > 1.0;
    case YoungFunction::Form::linear_jump:
      return false;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::vector<CandidatePair> NormedSpace::structured_pairs() const {
  const std::size_t d = dim();
  std::vector<CandidatePair> out;
  const std::size_t cap = std::min<std::size_t>(d, 12);
  const auto basis = [&](std::size_t i) {
    std::vector<double> v(d, 0.0);
    v[i] = 1.0;
    return v;
  };
  for (std::size_t i = 0; i < cap; ++i) {
    for (std::size_t j = i + 1; j < cap; ++j) {
      const auto ei = basis(i);
      const auto ej = basis(j);
      out.push_back({ei, ej});
      auto diag = ei;
      diag[j] = 1.0;
      auto anti = ei;
      anti[j] = -1.0;
      out.push_back({diag, anti});
      out.push_back({ei, diag});
    }
  }
  const std::vector<double> ones(d, 1.0);
  for (std::size_t i = 0; i < cap; ++i) {
    auto flipped = ones;
    flipped[i] = -1.0;
    out.push_back({ones, flipped});
  }
  return out;
}

FiberSpace::FiberSpace(RNModulePtr module, std::size_t atom)
    : module_(std::move(module)), atom_(atom) {
  if (!module_) throw ArgumentError("FiberSpace: null module");
  if (atom_ >= module_->atom_count()) throw ArgumentError("FiberSpace: atom out of range");
}

std::size_t FiberSpace::dim() const { return module_->fiber_dim(); }

double FiberSpace::norm(std::span<const double> v) const {
  return module_->fiber_norm(atom_, v);
}

std::string FiberSpace::describe() const {
  std::ostringstream os;
  os << "fiber(atom=" << atom_ << ", p=" << module_->fiber_p(atom_)
     << ", n=" << module_->fiber_dim() << ")";
  return os.str();
}

std::optional<bool> FiberSpace::strictly_convex_hint() const {
  if (module_->fiber_dim() <= 1) return true;
  const double p = module_->fiber_p(atom_);
  return p > 1.0 && p != kInf;
}

ScalarOrliczSpace::ScalarOrliczSpace(OrliczContext ctx, NormFlavor flavor)
    : ctx_(std::move(ctx)), flavor_(flavor) {}

std::size_t ScalarOrliczSpace::dim() const { return ctx_.space()->atom_count(); }

double ScalarOrliczSpace::norm(std::span<const double> v) const {
  return scalar_norm(ctx_, RandomVariable(ctx_.space(), {v.begin(), v.end()}), flavor_);
}

std::string ScalarOrliczSpace::describe() const {
  std::ostringstream os;
  os << "scalar("
     << (flavor_ == NormFlavor::luxemburg ? "luxemburg" : "orlicz")
     << ", m=" << dim() << ")";
  return os.str();
}

std::optional<bool> ScalarOrliczSpace::strictly_convex_hint() const {
  return young_strictness(ctx_.phi(), dim());
}

ModuleOrliczSpace::ModuleOrliczSpace(ModuleOrliczContext mctx, NormFlavor flavor)
    : mctx_(std::move(mctx)), flavor_(flavor) {}

std::size_t ModuleOrliczSpace::dim() const {
  return mctx_.module()->atom_count() * mctx_.module()->fiber_dim();
}

double ModuleOrliczSpace::norm(std::span<const double> v) const {
  return module_norm(mctx_, ModuleElement(mctx_.module(), {v.begin(), v.end()}),
                     flavor_);
}

std::string ModuleOrliczSpace::describe() const {
  std::ostringstream os;
  os << "composite("
     << (flavor_ == NormFlavor::luxemburg ? "luxemburg" : "orlicz")
     << ", m=" << mctx_.module()->atom_count() << ", n=" << mctx_.module()->fiber_dim()
     << ")";
  return os.str();
}

std::vector<CandidatePair> ModuleOrliczSpace::structured_pairs() const {
  auto out = NormedSpace::structured_pairs();
  // Constant-direction fields: the same fiber vector on every atom. These
  // expose fiber flat spots that single-atom probes scale away.
  const std::size_t m = mctx_.module()->atom_count();
  const std::size_t n = mctx_.module()->fiber_dim();
  const auto field = [&](std::size_t j, double ej, std::size_t k, double ek) {
    std::vector<double> v(m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      v[i * n + j] += ej;
      v[i * n + k] += ek;
    }
    return v;
  };
  const std::size_t cap = std::min<std::size_t>(n, 8);
  for (std::size_t j = 0; j < cap; ++j)
    for (std::size_t k = j + 1; k < cap; ++k) {
      out.push_back({field(j, 1.0, k, 0.0), field(j, 0.0, k, 1.0)});
      out.push_back({field(j, 1.0, k, 1.0), field(j, 1.0, k, -1.0)});
      out.push_back({field(j, 1.0, k, 0.0), field(j, 1.0, k, 1.0)});
    }
  return out;
}

bool revalidate(const NormedSpace& space, const Counterexample& c) {
  if (c.x.size() != space.dim() || c.y.size() != space.dim()) return false;
  const double nx = space.norm(c.x);
  const double ny = space.norm(c.y);
  const double sep = space.norm(vsub(c.x, c.y));
  const double mid = space.norm(vmid(c.x, c.y));
  return std::fabs(nx - 1.0) <= 1e-9 && std::fabs(ny - 1.0) <= 1e-9 &&
         sep > 1e-6 && mid >= kMidpointBar;
}

ConvexityVerdict strict_convexity_falsifier(const NormedSpace& space,
                                            long long budget, std::uint64_t seed) {
  if (budget <= 0) throw ArgumentError("strict_convexity_falsifier: budget must be positive");
  ConvexityVerdict out;
  out.seed = seed;
  const std::size_t d = space.dim();
  Rng rng(seed);
  const auto structured = space.structured_pairs();

  struct Incumbent {
    double mid = -1.0;
    std::vector<double> x, y;
  } best;

  std::optional<Counterexample> found;
  const auto consider = [&](std::vector<double> xr, std::vector<double> yr) {
    if (!normalize_in(space, xr) || !normalize_in(space, yr)) return false;
    const double sep = space.norm(vsub(xr, yr));
    if (!(sep >= kSepFloor)) return false;
    const double mid = space.norm(vmid(xr, yr));
    if (mid > best.mid) best = {mid, xr, yr};
    if (mid >= kMidpointBar) {
      Counterexample c{std::move(xr), std::move(yr), 0.0, 0.0, mid, sep};
      c.norm_x = space.norm(c.x);
      c.norm_y = space.norm(c.y);
      if (revalidate(space, c)) {
        found = std::move(c);
        return true;
      }
    }
    return false;
  };

  long long used = 0;
  double step = 0.25;
  int stale = 0;
  bool flip = false;
  while (used < budget && !found) {
    if (static_cast<std::size_t>(used) < structured.size()) {
      const auto& cand = structured[static_cast<std::size_t>(used)];
      ++used;
      consider(cand.x, cand.y);
    } else if (best.mid < 0.0 || (used & 1)) {
      std::vector<double> a(d), b(d);
      for (double& e : a) e = rng.normal();
      for (double& e : b) e = rng.normal();
      ++used;
      consider(std::move(a), std::move(b));
    } else {
      std::vector<double> a = best.x;
      std::vector<double> b = best.y;
      auto& target = flip ? a : b;
      flip = !flip;
      const std::size_t idx = rng.index(d);
      target[idx] += step * rng.normal() * std::max(1.0, std::fabs(target[idx]));
      const double before = best.mid;
      ++used;
      consider(std::move(a), std::move(b));
      if (best.mid <= before) {
        if (++stale >= 24) {
          step = std::max(step * 0.7, 1e-7);
          stale = 0;
        }
      } else {
        stale = 0;
      }
    }
  }
  out.search_budget = used;
  if (found) {
    out.status = ConvexityVerdict::Status::falsified;
    out.counterexample = std::move(found);
  }
  return out;
}

RandomStrictConvexityReport random_strict_convexity_check(const RNModulePtr& module,
                                                          long long budget,
                                                          std::uint64_t seed) {
  RandomStrictConvexityReport out;
  for (std::size_t atom = 0; atom < module->atom_count(); ++atom) {
    FiberSpace fs(module, atom);
    AtomConvexity entry;
    entry.atom = atom;
    entry.verdict = strict_convexity_falsifier(fs, budget, salt_seed(seed, atom));
    entry.analytic_strictly_convex = fs.strictly_convex_hint().value();
    const bool falsified =
        entry.verdict.status == ConvexityVerdict::Status::falsified;
    entry.agrees = entry.analytic_strictly_convex ? !falsified : falsified;
    out.all_verified = out.all_verified && !falsified;
    out.atoms.push_back(std::move(entry));
  }
  return out;
}

ModulusEstimate modulus_of_convexity(const NormedSpace& space, double epsilon,
                                     long long budget, std::uint64_t seed) {
  if (!(epsilon > 0.0) || !(epsilon <= 2.0))
    throw ArgumentError("modulus_of_convexity: epsilon must lie in (0, 2]");
  if (budget <= 0) throw ArgumentError("modulus_of_convexity: budget must be positive");

  const std::size_t d = space.dim();
  Rng rng(seed);
  ModulusEstimate out;
  out.epsilon = epsilon;

  // Antipodal incumbent: distance 2 is always feasible, the midpoint is the
  // origin, so delta = 1 is a valid starting upper bound.
  std::vector<double> u(d, 1.0);
  if (!normalize_in(space, u))
    throw ArgumentError("modulus_of_convexity: degenerate norm on the ones vector");
  out.delta = 1.0 - space.norm(vmid(u, vneg(u)));
  out.minimizing_pair = {u, vneg(u)};

  struct Base {
    std::vector<double> x, y;
    bool valid = false;
  } base;

  // Pulls the candidate pair to separation exactly epsilon by bisecting the
  // normalized segment path, keeping the feasible (>= epsilon) side.
  const auto process = [&](std::vector<double> xr, std::vector<double> yr) {
    if (!normalize_in(space, xr) || !normalize_in(space, yr)) return;
    double sep = space.norm(vsub(xr, yr));
    if (sep < epsilon) {
      yr = vneg(yr);
      sep = space.norm(vsub(xr, yr));
      if (sep < epsilon) return;
    }
    const auto at = [&](double t) {
      std::vector<double> c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = xr[i] + t * (yr[i] - xr[i]);
      if (!normalize_in(space, c)) c.clear();
      return c;
    };
    double lo = 0.0, hi = 1.0;
    std::vector<double> yhi = yr;
    for (int it = 0; it < 80; ++it) {
      const double t = 0.5 * (lo + hi);
      auto c = at(t);
      if (!c.empty() && space.norm(vsub(xr, c)) >= epsilon) {
        hi = t;
        yhi = std::move(c);
      } else {
        lo = t;
      }
    }
    const double delta = std::max(0.0, 1.0 - space.norm(vmid(xr, yhi)));
    if (delta < out.delta) {
      out.delta = delta;
      out.minimizing_pair = {xr, yhi};
      base = {std::move(xr), std::move(yr), true};
    }
  };

  const auto structured = space.structured_pairs();
  long long used = 0;
  double step = 0.3;
  bool flip = false;
  while (used < budget) {
    if (static_cast<std::size_t>(used) < structured.size()) {
      const auto& cand = structured[static_cast<std::size_t>(used)];
      ++used;
      process(cand.x, cand.y);
    } else if (!base.valid || (used & 1)) {
      std::vector<double> a(d), b(d);
      for (double& e : a) e = rng.normal();
      for (double& e : b) e = rng.normal();
      ++used;
      process(std::move(a), std::move(b));
    } else {
      std::vector<double> a = base.x;
      std::vector<double> b = base.y;
      auto& target = flip ? a : b;
      flip = !flip;
      const std::size_t idx = rng.index(d);
      target[idx] += step * rng.normal() * std::max(1.0, std::fabs(target[idx]));
      ++used;
      process(std::move(a), std::move(b));
      step = std::max(step * 0.999, 1e-6);
    }
  }
  out.budget_used = used;
  return out;
}

RandomModulusReport random_modulus(const RNModulePtr& module,
                                   const BoundedAwayField& eps, long long budget,
                                   std::uint64_t seed) {
  if (eps.cap() != 2.0)
    throw ArgumentError("random_modulus: epsilon field must be capped at 2");
  if (!same_space(eps.space(), module->space()))
    throw DimensionError("random_modulus: epsilon field lives on another space");

  RandomModulusReport out;
  out.infimum = kInf;
  for (std::size_t atom = 0; atom < module->atom_count(); ++atom) {
    out.per_atom.push_back(modulus_of_convexity(FiberSpace(module, atom), eps[atom],
                                                budget, salt_seed(seed, atom)));
    out.infimum = std::min(out.infimum, out.per_atom.back().delta);
  }
  out.uniformly_convex_by_estimate = out.infimum > 1e-6;
  if (out.uniformly_convex_by_estimate) {
    std::vector<double> deltas;
    for (const auto& e : out.per_atom) deltas.push_back(std::min(e.delta, 1.0));
    out.delta_candidate = BoundedAwayField(module->space(), std::move(deltas), 1.0);
  }
  return out;
}

MonotonicityReport monotonicity_check(const OrliczContext& ctx, NormFlavor flavor,
                                      int samples, std::uint64_t seed) {
  if (samples <= 0) throw ArgumentError("monotonicity_check: samples must be positive");
  const std::size_t m = ctx.space()->atom_count();
  MonotonicityReport out;
  const auto hint = young_strictness(ctx.phi(), m);
  out.strict_expected = hint.has_value() && *hint;
  out.samples = samples;
  out.min_margin = kInf;

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<double> xi(m), eta(m);
    for (std::size_t i = 0; i < m; ++i) {
      xi[i] = 0.1 + std::fabs(rng.normal());
      eta[i] = xi[i] * rng.uniform();
    }
    // Force a strict gap at one atom so the pair is genuinely distinct.
    eta[rng.index(m)] *= 0.5;
    const RandomVariable rx(ctx.space(), std::move(xi));
    const RandomVariable re(ctx.space(), std::move(eta));
    const double margin = scalar_norm(ctx, rx, flavor) - scalar_norm(ctx, re, flavor);
    if (margin < out.min_margin) {
      out.min_margin = margin;
      out.xi_at_min = rx.values();
      out.eta_at_min = re.values();
    }
    if (out.strict_expected && margin <= 1e-12) ++out.strict_violations;
  }
  return out;
}

namespace {

// Field with the fiber pair placed on one atom, scaled by the reciprocal of
// the indicator's scalar norm: the restriction route into the composite.
Counterexample lift_fiber_pair(const ModuleOrliczSpace& ms, std::size_t atom,
                               const Counterexample& fiber_cex, NormFlavor flavor) {
  const RNModulePtr& module = ms.mctx().module();
  const std::size_t n = module->fiber_dim();
  const EventClass d_atom(module->atom_count(), {atom});
  const double lambda = scalar_norm(
      ms.mctx().ctx(), RandomVariable::indicator(module->space(), d_atom), flavor);
  std::vector<double> x(ms.dim(), 0.0), y(ms.dim(), 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    x[atom * n + j] = fiber_cex.x[j] / lambda;
    y[atom * n + j] = fiber_cex.y[j] / lambda;
  }
  Counterexample out;
  out.norm_x = ms.norm(x);
  out.norm_y = ms.norm(y);
  out.separation = ms.norm(vsub(x, y));
  out.midpoint_norm = ms.norm(vmid(x, y));
  out.x = std::move(x);
  out.y = std::move(y);
  return out;
}

// Scalar pair times the canonical unit field: the product route.
Counterexample lift_scalar_pair(const ModuleOrliczSpace& ms,
                                const Counterexample& scalar_cex) {
  const RNModulePtr& module = ms.mctx().module();
  const std::size_t m = module->atom_count();
  const std::size_t n = module->fiber_dim();
  const ModuleElement x0 = full_support_indicator(module).unit_field;
  std::vector<double> x(ms.dim(), 0.0), y(ms.dim(), 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x[i * n + j] = scalar_cex.x[i] * x0(i, j);
      y[i * n + j] = scalar_cex.y[i] * x0(i, j);
    }
  Counterexample out;
  out.norm_x = ms.norm(x);
  out.norm_y = ms.norm(y);
  out.separation = ms.norm(vsub(x, y));
  out.midpoint_norm = ms.norm(vmid(x, y));
  out.x = std::move(x);
  out.y = std::move(y);
  return out;
}

}  // namespace

StrictEquivalenceReport equivalence_harness(const ModuleOrliczContext& mctx,
                                            NormFlavor flavor, long long budget,
                                            std::uint64_t seed) {
  StrictEquivalenceReport out;
  const ScalarOrliczSpace scalar_space(mctx.ctx(), flavor);
  const ModuleOrliczSpace composite_space(mctx, flavor);

  out.scalar = strict_convexity_falsifier(scalar_space, budget, salt_seed(seed, 101));
  out.fibers = random_strict_convexity_check(mctx.module(), budget, salt_seed(seed, 202));
  out.composite =
      strict_convexity_falsifier(composite_space, budget, salt_seed(seed, 303));

  const bool scalar_bad = out.scalar.status == ConvexityVerdict::Status::falsified;
  const bool composite_bad =
      out.composite.status == ConvexityVerdict::Status::falsified;
  bool fiber_bad = false;
  std::size_t bad_atom = 0;
  for (const auto& a : out.fibers.atoms)
    if (a.verdict.status == ConvexityVerdict::Status::falsified && !fiber_bad) {
      fiber_bad = true;
      bad_atom = a.atom;
    }

  // The equivalence, read as two checkable implications on one instance.
  out.consistent = (!composite_bad || scalar_bad || fiber_bad) &&
                   (!(!scalar_bad && !fiber_bad) || !composite_bad);

  if (fiber_bad) {
    const auto& cex = *out.fibers.atoms[bad_atom].verdict.counterexample;
    out.fiber_lift = lift_fiber_pair(composite_space, bad_atom, cex, flavor);
    out.lifts_valid = out.lifts_valid && revalidate(composite_space, *out.fiber_lift);
  }
  if (scalar_bad) {
    out.scalar_lift = lift_scalar_pair(composite_space, *out.scalar.counterexample);
    out.lifts_valid = out.lifts_valid && revalidate(composite_space, *out.scalar_lift);
  }
  return out;
}

ModulusImplicationReport modulus_harness(const ModuleOrliczContext& mctx,
                                         NormFlavor flavor, double epsilon,
                                         long long budget, std::uint64_t seed) {
  ModulusImplicationReport out;
  out.epsilon = epsilon;
  out.scalar = modulus_of_convexity(ScalarOrliczSpace(mctx.ctx(), flavor), epsilon,
                                    budget, salt_seed(seed, 11));
  out.fiber_min = kInf;
  for (std::size_t atom = 0; atom < mctx.module()->atom_count(); ++atom) {
    out.per_fiber.push_back(modulus_of_convexity(FiberSpace(mctx.module(), atom),
                                                 epsilon, budget,
                                                 salt_seed(seed, 100 + atom)));
    out.fiber_min = std::min(out.fiber_min, out.per_fiber.back().delta);
  }
  out.composite = modulus_of_convexity(ModuleOrliczSpace(mctx, flavor), epsilon,
                                       budget, salt_seed(seed, 12));
  const double component_min = std::min(out.scalar.delta, out.fiber_min);
  out.contradiction = out.composite.delta >= 1e-3 && component_min <= 1e-6;
  return out;
}

std::vector<ModulusSurveyRow> modulus_survey(const ModuleOrliczContext& mctx,
                                             NormFlavor flavor,
                                             const std::vector<double>& eps_list,
                                             long long budget, std::uint64_t seed) {
  std::vector<ModulusSurveyRow> rows;
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    const auto rep = modulus_harness(mctx, flavor, eps_list[k], budget,
                                     salt_seed(seed, 1000 + k));
    rows.push_back({rep.epsilon, rep.scalar.delta, rep.fiber_min, rep.composite.delta});
  }
  return rows;
}

}  // namespace orlicz
