#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orlicz/orlicz_scalar.hpp"
#include "orlicz/rn_module.hpp"

namespace orlicz {

// Couples a Young pair with an RN module over the same probability space:
// the composite space of fields whose random norm has finite modular.
class ModuleOrliczContext {
public:
  ModuleOrliczContext(OrliczContext ctx, RNModulePtr module);

  const OrliczContext& ctx() const { return ctx_; }
  const RNModulePtr& module() const { return module_; }

private:
  OrliczContext ctx_;
  RNModulePtr module_;
};

// Membership of random_norm(x) in the scalar spaces.
Membership module_membership(const ModuleOrliczContext& mctx, const ModuleElement& x);

// Scalar norm of the random norm of x.
double module_norm(const ModuleOrliczContext& mctx, const ModuleElement& x,
                   NormFlavor flavor);

// x restricted to the atoms where ||x|| <= n: the bounded approximant used
// to show the bounded fields are dense.
ModuleElement truncation(const ModuleOrliczContext& mctx, const ModuleElement& x,
                         int n);

struct DensityReport {
  int n = 0;              // first truncation level with distance <= tol
  double distance = 0.0;  // achieved distance at that level
  std::vector<double> distances;  // levels 1..n
};

// Walks truncation levels until the distance to x falls below tol. On a
// finite atom space the distance hits exactly zero once n clears max||x||.
// PreconditionError when x lies outside the heart (jump contexts).
DensityReport density_check(const ModuleOrliczContext& mctx, const ModuleElement& x,
                            double tol);

struct CauchyReport {
  bool cauchy = true;           // tail diameters below tol
  bool converges = true;        // sequence approaches its final element
  bool metric_cauchy = true;    // prob_metric of random norms also settles
  double final_distance = 0.0;  // norm distance of the last step
  std::size_t first_bad_i = 0;  // violating pair when not Cauchy
  std::size_t first_bad_j = 0;
  double first_bad_gap = 0.0;
  std::vector<double> step_distances;    // ||x_{k+1} - x_k||
  std::vector<double> metric_distances;  // prob_metric(||x_k - limit||, 0)
};

// Checks the sequence is Cauchy in the composite Luxemburg norm, takes the
// final element as the limit candidate, and verifies both norm convergence
// and the induced prob_metric convergence of the random norms.
// PreconditionError (with the first violating pair) when not Cauchy.
CauchyReport cauchy_limit_check(const ModuleOrliczContext& mctx,
                                const std::vector<ModuleElement>& sequence,
                                double tol);

}  // namespace orlicz
