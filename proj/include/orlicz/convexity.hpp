#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/duality.hpp"
#include "orlicz/orlicz_module.hpp"

namespace orlicz {

struct CandidatePair {
  std::vector<double> x;
  std::vector<double> y;
};

// A finite-dimensional real normed space presented as a norm on flat
// coordinate vectors: the shared ground the convexity searches walk on.
class NormedSpace {
public:
  virtual ~NormedSpace() = default;
  virtual std::size_t dim() const = 0;
  virtual double norm(std::span<const double> v) const = 0;
  virtual std::string describe() const = 0;

  // Raw pairs probing flat spots of the unit sphere; the searches normalize
  // them. The default catalog covers basis pairs, diagonal/antidiagonal
  // pairs, one-coordinate sign flips and single-coordinate perturbations.
  virtual std::vector<CandidatePair> structured_pairs() const;

  // Analytic strict-convexity knowledge, when the geometry is known.
  virtual std::optional<bool> strictly_convex_hint() const { return std::nullopt; }
};

// One fiber of an RN module.
class FiberSpace final : public NormedSpace {
public:
  FiberSpace(RNModulePtr module, std::size_t atom);
  std::size_t dim() const override;
  double norm(std::span<const double> v) const override;
  std::string describe() const override;
  std::optional<bool> strictly_convex_hint() const override;

private:
  RNModulePtr module_;
  std::size_t atom_;
};

// The scalar space under a Young-function norm; coordinates are atoms.
class ScalarOrliczSpace final : public NormedSpace {
public:
  ScalarOrliczSpace(OrliczContext ctx, NormFlavor flavor);
  std::size_t dim() const override;
  double norm(std::span<const double> v) const override;
  std::string describe() const override;
  std::optional<bool> strictly_convex_hint() const override;
  const OrliczContext& ctx() const { return ctx_; }

private:
  OrliczContext ctx_;
  NormFlavor flavor_;
};

// The composite space of fields; coordinates are atom-major fiber entries.
class ModuleOrliczSpace final : public NormedSpace {
public:
  ModuleOrliczSpace(ModuleOrliczContext mctx, NormFlavor flavor);
  std::size_t dim() const override;
  double norm(std::span<const double> v) const override;
  std::string describe() const override;
  std::vector<CandidatePair> structured_pairs() const override;
  const ModuleOrliczContext& mctx() const { return mctx_; }

private:
  ModuleOrliczContext mctx_;
  NormFlavor flavor_;
};

struct Counterexample {
  std::vector<double> x;
  std::vector<double> y;
  double norm_x = 0.0;
  double norm_y = 0.0;
  double midpoint_norm = 0.0;
  double separation = 0.0;  // ||x - y|| in the space's own norm
};

struct ConvexityVerdict {
  enum class Status { verified_by_search, falsified };
  Status status = Status::verified_by_search;
  std::optional<Counterexample> counterexample;
  long long search_budget = 0;  // candidates examined
  std::uint64_t seed = 0;
};

// Independent recheck of a counterexample: unit norms within 1e-9,
// separation beyond 1e-6, midpoint norm at least 1 - 1e-9.
bool revalidate(const NormedSpace& space, const Counterexample& c);

// Searches for distinct unit-norm x, y whose midpoint also has norm one:
// structured pairs first, then interleaved random pairs and hill-climb
// refinement of the best pair so far. Falsified verdicts are certificates
// (revalidated before return); verified-by-search is not a proof.
ConvexityVerdict strict_convexity_falsifier(const NormedSpace& space,
                                            long long budget, std::uint64_t seed);

struct AtomConvexity {
  std::size_t atom = 0;
  ConvexityVerdict verdict;
  bool analytic_strictly_convex = true;
  bool agrees = true;  // search outcome matches the analytic flag
};

struct RandomStrictConvexityReport {
  std::vector<AtomConvexity> atoms;
  bool all_verified = true;
};

// Per-atom fiber strict convexity: the atom-localized notion reduces to the
// fibers on a finite space. Runs the falsifier per fiber and compares with
// the analytic l_p classification.
RandomStrictConvexityReport random_strict_convexity_check(const RNModulePtr& module,
                                                          long long budget,
                                                          std::uint64_t seed);

struct ModulusEstimate {
  double epsilon = 0.0;
  double delta = 0.0;  // smallest 1 - ||midpoint|| found: an upper bound
  CandidatePair minimizing_pair;
  long long budget_used = 0;
};

// Estimates inf{1 - ||(x+y)/2||} over unit x, y with ||x - y|| >= eps by a
// deterministic prefix-stable candidate stream: structured and random sphere
// pairs are pulled to separation exactly eps by bisection along the sphere
// path, plus antipodal pairs and descent steps on the incumbent. More budget
// never raises the estimate.
ModulusEstimate modulus_of_convexity(const NormedSpace& space, double epsilon,
                                     long long budget, std::uint64_t seed);

struct RandomModulusReport {
  std::vector<ModulusEstimate> per_atom;
  double infimum = 0.0;  // atomwise infimum of the estimates
  bool uniformly_convex_by_estimate = false;
  std::optional<BoundedAwayField> delta_candidate;  // present on a positive verdict
};

// Per-atom fiber modulus at the field's epsilon values; positive verdict iff
// the infimum stays above 1e-6, in which case the estimates form the delta
// field candidate.
RandomModulusReport random_modulus(const RNModulePtr& module,
                                   const BoundedAwayField& eps, long long budget,
                                   std::uint64_t seed);

struct MonotonicityReport {
  bool strict_expected = false;  // norm geometry known strictly convex
  int samples = 0;
  double min_margin = 0.0;  // min of norm(xi) - norm(eta)
  int strict_violations = 0;
  std::vector<double> xi_at_min;
  std::vector<double> eta_at_min;
};

// Samples dominated pairs 0 <= eta <= xi, eta != xi, and records the margin
// norm(xi) - norm(eta); under a strictly convex scalar geometry the margin
// must exceed 1e-12 on every sample.
MonotonicityReport monotonicity_check(const OrliczContext& ctx, NormFlavor flavor,
                                      int samples, std::uint64_t seed);

struct StrictEquivalenceReport {
  ConvexityVerdict scalar;
  RandomStrictConvexityReport fibers;
  ConvexityVerdict composite;
  bool consistent = true;  // the two implications hold on this instance
  // Counterexample lifts into the composite space:
  std::optional<Counterexample> fiber_lift;   // restrict to the atom, divide
                                              // by the indicator's norm
  std::optional<Counterexample> scalar_lift;  // multiply by the unit field
  bool lifts_valid = true;
};

// Runs the scalar falsifier, the per-fiber check and the composite
// falsifier, asserts the equivalence's two implications, and materializes
// the composite counterexample lifts whenever a component falsifies.
StrictEquivalenceReport equivalence_harness(const ModuleOrliczContext& mctx,
                                            NormFlavor flavor, long long budget,
                                            std::uint64_t seed);

struct ModulusImplicationReport {
  double epsilon = 0.0;
  ModulusEstimate scalar;
  std::vector<ModulusEstimate> per_fiber;
  ModulusEstimate composite;
  double fiber_min = 0.0;
  // True when the composite estimate stays away from zero while some
  // component estimate vanishes; must stay false.
  bool contradiction = false;
};

// Uniform-convexity direction: component moduli against the composite
// modulus at one epsilon.
ModulusImplicationReport modulus_harness(const ModuleOrliczContext& mctx,
                                         NormFlavor flavor, double epsilon,
                                         long long budget, std::uint64_t seed);

struct ModulusSurveyRow {
  double epsilon = 0.0;
  double scalar_delta = 0.0;
  double fiber_min_delta = 0.0;
  double composite_delta = 0.0;
};

// Exploratory tabulation of composite against component moduli over an
// epsilon grid; asserts nothing (the converse direction is open).
std::vector<ModulusSurveyRow> modulus_survey(const ModuleOrliczContext& mctx,
                                             NormFlavor flavor,
                                             const std::vector<double>& eps_list,
                                             long long budget, std::uint64_t seed);

}  // namespace orlicz
