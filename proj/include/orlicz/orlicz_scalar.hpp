#pragma once

#include <cstdint>

#include "orlicz/prob_core.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class NormFlavor { luxemburg, orlicz };

// A Young function, its conjugate, and the probability space they act on.
// The two-argument constructor computes the conjugate itself; the three-
// argument one cross-checks a supplied conjugate on a sample grid.
class OrliczContext {
public:
  OrliczContext(YoungFunction phi, ProbSpacePtr space);
  OrliczContext(YoungFunction phi, YoungFunction psi, ProbSpacePtr space);

  const YoungFunction& phi() const { return phi_; }
  const YoungFunction& psi() const { return psi_; }
  const ProbSpacePtr& space() const { return space_; }

  // Same space with the roles of phi and psi exchanged.
  OrliczContext swapped() const;

private:
  struct Unchecked {};
  OrliczContext(Unchecked, YoungFunction phi, YoungFunction psi, ProbSpacePtr space);

  YoungFunction phi_;
  YoungFunction psi_;
  ProbSpacePtr space_;
};

// E[phi(|xi| / lambda)], +inf allowed. lambda must be positive.
double modular(const OrliczContext& ctx, const RandomVariable& xi, double lambda);

// inf{ lambda > 0 : modular(xi, lambda) <= 1 }, by bisection on a bracketed
// lambda; the returned value is always on the feasible side.
double luxemburg_norm(const OrliczContext& ctx, const RandomVariable& xi);

// inf_{k > 0} (1 + E[phi(k |xi|)]) / k, by golden section on log k. Equals
// the dual formula sup{ E[xi eta] : eta in the unit psi modular ball }.
double orlicz_norm(const OrliczContext& ctx, const RandomVariable& xi);

// Brute-force check of the dual formula: maximizes E[xi eta] over eta with
// E[psi(|eta|)] <= 1 by structured starts plus hill climbing. Guards with
// ScaleError above four atoms; independent of the Amemiya route.
double orlicz_norm_oracle(const OrliczContext& ctx, const RandomVariable& xi,
                          std::uint64_t seed = 1);

// eta with |eta|_{psi,luxemburg} <= 1 + 1e-6 and E[xi eta] >= orlicz - 1e-5.
// Closed form for the power families and linear_jump, search otherwise.
RandomVariable pairing_witness(const OrliczContext& ctx, const RandomVariable& xi);

// eta with |eta|_{psi,orlicz} <= 1 + 1e-6 and E[xi eta] >= luxemburg - 1e-5:
// the equality witness for the other pairing direction.
RandomVariable orlicz_ball_witness(const OrliczContext& ctx, const RandomVariable& xi);

struct Membership {
  bool in_l_phi = false;  // some scaling has finite modular
  bool in_m_phi = false;  // every scaling has finite modular
};

Membership membership(const OrliczContext& ctx, const RandomVariable& xi);

double scalar_norm(const OrliczContext& ctx, const RandomVariable& xi,
                   NormFlavor flavor);

}  // namespace orlicz
