#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orlicz/orlicz_module.hpp"

namespace orlicz {

// The linear functional x -> E[<x, f>] on the composite space, carrying the
// coefficient field it came from. Construction checks that the dual random
// norm of f is admissible when the conjugate has a jump.
class EmbeddedFunctional {
public:
  EmbeddedFunctional(RandomFunctional f, ModuleOrliczContext mctx);

  const RandomFunctional& f() const { return f_; }
  const ModuleOrliczContext& mctx() const { return mctx_; }

  double operator()(const ModuleElement& x) const;

private:
  RandomFunctional f_;
  ModuleOrliczContext mctx_;
};

EmbeddedFunctional embed(RandomFunctional f, ModuleOrliczContext mctx);

// Best value of |Tf(x)| over the unit ball of the chosen module norm found
// by seeded multi-start projected ascent. Always a valid lower bound of the
// operator norm; tight at converged budgets.
double operator_norm(const EmbeddedFunctional& tf, NormFlavor flavor, int budget,
                     std::uint64_t seed);

// Near-extremal element: x* = xi* . norming_field(f) with xi* the scalar
// extremal for ||f||* under the flavor's dual pairing. ArgumentError on
// f = 0.
ModuleElement witness_element(const RandomFunctional& f,
                              const ModuleOrliczContext& mctx, NormFlavor flavor,
                              double tol);

struct RepresentReport {
  RandomFunctional f;
  // Diagnostics of the finite Radon-Nikodym construction:
  std::vector<double> mu_singletons;   // mu_{x0}({omega}) = F(I_omega x0)
  std::vector<double> xi_x0;           // density of mu_{x0}: F(I_omega x0)/p_omega
  std::vector<double> x_g;             // sup of |g| over sampled unit elements
  std::vector<double> dual_norm_of_f;  // ||f||* atomwise, must equal x_g
  double max_spanning_residual = 0.0;  // |F(b) - E[<b,f>]| over the basis
};

// Recovers the coefficient field of a black-box linear functional on the
// composite space: f(omega)_j = F(I_omega e_j) / p_omega. Linearity is
// sampled first (PreconditionError with a witness pair when it fails).
RepresentReport represent(const std::function<double(const ModuleElement&)>& bigF,
                          const ModuleOrliczContext& mctx, std::uint64_t seed = 7);

struct IsometryReport {
  double lhs = 0.0;  // operator norm over the flavor's unit ball
  double rhs = 0.0;  // conjugate scalar norm of ||f||*, dual flavor
  NormFlavor flavor = NormFlavor::luxemburg;
  bool pass = false;
  double witness_gap = 0.0;  // rhs - pairing of the witness element
};

// Compares the operator norm of Tf against the conjugate norm of ||f||*:
// Luxemburg module norm pairs with the Orlicz conjugate norm and the other
// way around. Passes iff |lhs - rhs| <= 1e-4 max(rhs, 1).
IsometryReport isometry_check(const RandomFunctional& f,
                              const ModuleOrliczContext& mctx, NormFlavor flavor,
                              int budget = 500, std::uint64_t seed = 11);

}  // namespace orlicz
