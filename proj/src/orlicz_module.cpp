#include "orlicz/orlicz_module.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

ModuleOrliczContext::ModuleOrliczContext(OrliczContext ctx, RNModulePtr module)
    : ctx_(std::move(ctx)), module_(std::move(module)) {
  if (!module_) throw ArgumentError("ModuleOrliczContext: null module");
  if (!same_space(ctx_.space(), module_->space()))
    throw DimensionError(
        "ModuleOrliczContext: context and module live on different spaces");
}

Membership module_membership(const ModuleOrliczContext& mctx, const ModuleElement& x) {
  return membership(mctx.ctx(), random_norm(x));
}

double module_norm(const ModuleOrliczContext& mctx, const ModuleElement& x,
                   NormFlavor flavor) {
  return scalar_norm(mctx.ctx(), random_norm(x), flavor);
}

ModuleElement truncation(const ModuleOrliczContext&, const ModuleElement& x, int n) {
  if (n <= 0) throw ArgumentError("truncation: level must be positive");
  const RandomVariable nx = random_norm(x);
  std::vector<double> v(x.flat().size(), 0.0);
  const std::size_t dim = x.fiber_dim();
  for (std::size_t i = 0; i < x.atom_count(); ++i) {
    if (nx[i] <= static_cast<double>(n))
      for (std::size_t j = 0; j < dim; ++j) v[i * dim + j] = x(i, j);
  }
  return ModuleElement(x.module(), std::move(v));
}

DensityReport density_check(const ModuleOrliczContext& mctx, const ModuleElement& x,
                            double tol) {
  if (!(tol > 0.0)) throw ArgumentError("density_check: tolerance must be positive");
  const Membership mem = module_membership(mctx, x);
  if (!mem.in_m_phi)
    throw PreconditionError(
        "density_check: x lies outside the heart, no truncation sequence converges");

  DensityReport out;
  const double cap = random_norm(x).max_abs();
  const int max_level = static_cast<int>(std::ceil(cap)) + 1;
  for (int n = 1; n <= std::max(1, max_level); ++n) {
    const double d = module_norm(mctx, x - truncation(mctx, x, n), NormFlavor::luxemburg);
    out.distances.push_back(d);
    out.n = n;
    out.distance = d;
    if (d <= tol) return out;
  }
  // Unreachable for finite atoms: the loop cap clears max||x||, where the
  // difference is the zero element.
  throw Error("density_check: truncation distance failed to fall below tolerance");
}

CauchyReport cauchy_limit_check(const ModuleOrliczContext& mctx,
                                const std::vector<ModuleElement>& sequence,
                                double tol) {
  if (!(tol > 0.0))
    throw ArgumentError("cauchy_limit_check: tolerance must be positive");
  if (sequence.size() < 2)
    throw ArgumentError("cauchy_limit_check: need at least two elements");

  CauchyReport out;
  const std::size_t k = sequence.size();

  // Cauchy scan: every pair in the tail past index i must stay within tol
  // once the step distances suggest settling; concretely, flag the first
  // pair (i, j), i < j, with distance > tol among the last half.
  const std::size_t tail_start = k / 2;
  for (std::size_t i = tail_start; i < k && out.cauchy; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double d =
          module_norm(mctx, sequence[j] - sequence[i], NormFlavor::luxemburg);
      if (d > tol) {
        out.cauchy = false;
        out.first_bad_i = i;
        out.first_bad_j = j;
        out.first_bad_gap = d;
        break;
      }
    }
  }
  if (!out.cauchy) {
    std::ostringstream os;
    os << "cauchy_limit_check: pair (" << out.first_bad_i << ", " << out.first_bad_j
       << ") is " << out.first_bad_gap << " apart, above " << tol;
    throw PreconditionError(os.str());
  }

  for (std::size_t i = 0; i + 1 < k; ++i)
    out.step_distances.push_back(
        module_norm(mctx, sequence[i + 1] - sequence[i], NormFlavor::luxemburg));

  // The atomwise limit of a norm-settling sequence is its final element up
  // to tol; use it as the limit candidate.
  const ModuleElement& limit = sequence.back();
  out.final_distance =
      module_norm(mctx, sequence[k - 1] - sequence[k - 2], NormFlavor::luxemburg);
  out.converges = out.final_distance <= tol;

  // Norm convergence dominates convergence in probability: with
  // d = ||x_i - limit||_{Phi,L} the modular of the gap at scale d is <= 1,
  // so P(gap >= eps) <= 1 / Phi(eps / d) by Markov, and the metric distance
  // is at most inf_eps [ eps/(1+eps) + 1/Phi(eps/d) ]. Verify each element
  // sits under that bound, which tends to 0 with d.
  const auto metric_bound = [&](double d) {
    if (d <= 0.0) return 0.0;
    double best = 1.0;
    for (double eps = 1e-6; eps <= 64.0; eps *= 2.0) {
      const double phi = mctx.ctx().phi()(eps / d);
      const double tail = phi > 1.0 ? 1.0 / phi : 1.0;
      best = std::min(best, eps / (1.0 + eps) + tail);
    }
    return best;
  };
  for (std::size_t i = 0; i < k; ++i) {
    const RandomVariable gap = random_norm(sequence[i] - limit);
    const double metric =
        prob_metric(gap, RandomVariable::zero(gap.space()));
    out.metric_distances.push_back(metric);
    const double d = module_norm(mctx, sequence[i] - limit, NormFlavor::luxemburg);
    if (metric > metric_bound(d) + 1e-12) out.metric_cauchy = false;
  }
  return out;
}

}  // namespace orlicz
