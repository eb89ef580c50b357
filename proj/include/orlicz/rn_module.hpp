#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "orlicz/prob_core.hpp"

namespace orlicz {

// Finitely generated module L0(F, R)^n with an l_p norm on each fiber; the
// exponent may differ per atom (p = inf is allowed and stored as IEEE inf).
class RNModule {
public:
  RNModule(ProbSpacePtr space, std::size_t fiber_dim, std::vector<double> fiber_p);
  RNModule(ProbSpacePtr space, std::size_t fiber_dim, double fiber_p);

  // Skips the p >= 1 range check so axiom-violation demonstrations can be
  // built on purpose; everything else still validates.
  static RNModule unchecked(ProbSpacePtr space, std::size_t fiber_dim,
                            std::vector<double> fiber_p);

  const ProbSpacePtr& space() const { return space_; }
  std::size_t atom_count() const { return space_->atom_count(); }
  std::size_t fiber_dim() const { return fiber_dim_; }
  double fiber_p(std::size_t atom) const;
  const std::vector<double>& fiber_exponents() const { return fiber_p_; }

  // Conjugate exponent of the fiber at an atom (1/p + 1/q = 1).
  double dual_exponent(std::size_t atom) const;

  // l_p norm of a fiber vector under this atom's exponent.
  double fiber_norm(std::size_t atom, std::span<const double> v) const;

private:
  RNModule() = default;

  ProbSpacePtr space_;
  std::size_t fiber_dim_ = 0;
  std::vector<double> fiber_p_;
};

using RNModulePtr = std::shared_ptr<const RNModule>;

RNModulePtr make_module(ProbSpacePtr space, std::size_t fiber_dim,
                        std::vector<double> fiber_p);
RNModulePtr make_module(ProbSpacePtr space, std::size_t fiber_dim, double fiber_p);

// One fiber vector per atom: the common storage of module elements and of
// the coefficient fields of functionals.
class FiberField {
public:
  FiberField(RNModulePtr module, std::vector<double> flat);
  static std::vector<double> zero_data(const RNModulePtr& module);

  const RNModulePtr& module() const { return module_; }
  std::size_t atom_count() const { return module_->atom_count(); }
  std::size_t fiber_dim() const { return module_->fiber_dim(); }

  double operator()(std::size_t atom, std::size_t coord) const;
  double& at(std::size_t atom, std::size_t coord);
  std::span<const double> fiber(std::size_t atom) const;
  const std::vector<double>& flat() const { return entries_; }
  bool is_zero() const;

protected:
  RNModulePtr module_;
  std::vector<double> entries_;  // atom-major
};

class ModuleElement : public FiberField {
public:
  using FiberField::FiberField;
  static ModuleElement zero(const RNModulePtr& module);
};

class RandomFunctional : public FiberField {
public:
  using FiberField::FiberField;
  static RandomFunctional zero(const RNModulePtr& module);
};

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator*(double c, const ModuleElement& a);
// Module action of L0: atomwise scaling by xi.
ModuleElement scale_by(const RandomVariable& xi, const ModuleElement& a);

// omega -> ||x(omega)|| under the fiber norms.
RandomVariable random_norm(const ModuleElement& x);

struct RnAxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Samples scalars and elements and checks definiteness, L0 homogeneity and
// the fiberwise triangle inequality to 1e-10.
RnAxiomReport validate_rn_axioms(const RNModulePtr& module, int sample_count,
                                 std::uint64_t seed);

// support(||x||) ^ support(||y||) ^ support(||x - y||).
EventClass b_set(const ModuleElement& x, const ModuleElement& y);

// Fiberwise x / ||x|| on the support of ||x||, zero elsewhere. The result
// has random norm equal to the indicator of the support. ArgumentError on
// the zero element.
ModuleElement normalize_to_sphere(const ModuleElement& x);

// omega -> <x(omega), f(omega)>.
RandomVariable apply_functional(const RandomFunctional& f, const ModuleElement& x);

// omega -> l_q norm of f(omega), q conjugate to the atom's p.
RandomVariable dual_random_norm(const RandomFunctional& f);

// Sampled sup of |<u, f(omega)>| over the fiber unit ball: random boundary
// points plus the sign-pattern and basis vertices. A lower bound that
// converges to the dual norm; ScaleError above four fiber dimensions.
RandomVariable dual_norm_oracle(const RandomFunctional& f, std::size_t samples,
                                std::uint64_t seed);

// Fiberwise Hoelder extremizer: unit vector u(omega) with <u, f> = ||f||_q,
// zero where f vanishes. Ties at p in {1, inf} break toward the lowest
// coordinate index.
ModuleElement norming_field(const RandomFunctional& f);

// Strictly positive random variable bounded away from 0 and capped at 1 or
// 2: the admissible epsilon and delta fields of random uniform convexity.
class BoundedAwayField {
public:
  BoundedAwayField(ProbSpacePtr space, std::vector<double> values, double cap);
  static BoundedAwayField constant(ProbSpacePtr space, double value, double cap);

  const ProbSpacePtr& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  double lower_bound() const { return lower_bound_; }
  double cap() const { return cap_; }
  double operator[](std::size_t atom) const { return values_[atom]; }

private:
  ProbSpacePtr space_;
  std::vector<double> values_;
  double lower_bound_ = 0.0;
  double cap_ = 0.0;
};

struct FullSupport {
  EventClass atoms;
  ModuleElement unit_field;
};

// On these finitely generated modules every atom carries a nonzero vector,
// so the support is everything and the canonical unit field is e1 scaled to
// fiber norm one.
FullSupport full_support_indicator(const RNModulePtr& module);

}  // namespace orlicz
