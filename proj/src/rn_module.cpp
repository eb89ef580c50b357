#include "orlicz/rn_module.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

void require_same_module(const FiberField& a, const FiberField& b, const char* who) {
  const bool ok = a.module() == b.module() ||
                  (same_space(a.module()->space(), b.module()->space()) &&
                   a.module()->fiber_dim() == b.module()->fiber_dim() &&
                   a.module()->fiber_exponents() == b.module()->fiber_exponents());
  if (!ok) throw DimensionError(std::string(who) + ": operands from different modules");
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

RNModule::RNModule(ProbSpacePtr space, std::size_t fiber_dim,
                   std::vector<double> fiber_p) {
  if (!space) throw ArgumentError("RNModule: null space");
  if (fiber_dim == 0) throw ArgumentError("RNModule: fiber dimension must be positive");
  if (fiber_p.size() != space->atom_count())
    throw DimensionError("RNModule: one fiber exponent per atom required");
  for (double p : fiber_p)
    if (std::isnan(p) || !(p >= 1.0))
      throw ArgumentError("RNModule: fiber exponents must satisfy p >= 1");
  space_ = std::move(space);
  fiber_dim_ = fiber_dim;
  fiber_p_ = std::move(fiber_p);
}

RNModule::RNModule(ProbSpacePtr space, std::size_t fiber_dim, double fiber_p)
    : RNModule(space, fiber_dim,
               std::vector<double>(space ? space->atom_count() : 0, fiber_p)) {}

RNModule RNModule::unchecked(ProbSpacePtr space, std::size_t fiber_dim,
                             std::vector<double> fiber_p) {
  if (!space) throw ArgumentError("RNModule: null space");
  if (fiber_dim == 0) throw ArgumentError("RNModule: fiber dimension must be positive");
  if (fiber_p.size() != space->atom_count())
    throw DimensionError("RNModule: one fiber exponent per atom required");
  for (double p : fiber_p)
    if (std::isnan(p) || !(p > 0.0))
      throw ArgumentError("RNModule::unchecked: fiber exponents must be positive");
  RNModule m;
  m.space_ = std::move(space);
  m.fiber_dim_ = fiber_dim;
  m.fiber_p_ = std::move(fiber_p);
  return m;
}

double RNModule::fiber_p(std::size_t atom) const {
  if (atom >= fiber_p_.size()) throw ArgumentError("RNModule::fiber_p: atom out of range");
  return fiber_p_[atom];
}

double RNModule::dual_exponent(std::size_t atom) const {
  const double p = fiber_p(atom);
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

double RNModule::fiber_norm(std::size_t atom, std::span<const double> v) const {
  if (v.size() != fiber_dim_)
    throw DimensionError("RNModule::fiber_norm: wrong fiber dimension");
  const double p = fiber_p(atom);
  if (p == kInf) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::fabs(x);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double x : v) s += std::pow(std::fabs(x), p);
  return std::pow(s, 1.0 / p);
}

RNModulePtr make_module(ProbSpacePtr space, std::size_t fiber_dim,
                        std::vector<double> fiber_p) {
  return std::make_shared<const RNModule>(std::move(space), fiber_dim,
                                          std::move(fiber_p));
}

RNModulePtr make_module(ProbSpacePtr space, std::size_t fiber_dim, double fiber_p) {
  return std::make_shared<const RNModule>(std::move(space), fiber_dim, fiber_p);
}

FiberField::FiberField(RNModulePtr module, std::vector<double> flat)
    : module_(std::move(module)), entries_(std::move(flat)) {
  if (!module_) throw ArgumentError("FiberField: null module");
  if (entries_.size() != module_->atom_count() * module_->fiber_dim())
    throw DimensionError("FiberField: atom_count * fiber_dim entries required");
  for (double v : entries_)
    if (std::isnan(v)) throw ArgumentError("FiberField: NaN entry");
}

std::vector<double> FiberField::zero_data(const RNModulePtr& module) {
  if (!module) throw ArgumentError("FiberField: null module");
  return std::vector<double>(module->atom_count() * module->fiber_dim(), 0.0);
}

double FiberField::operator()(std::size_t atom, std::size_t coord) const {
  return entries_[atom * module_->fiber_dim() + coord];
}

double& FiberField::at(std::size_t atom, std::size_t coord) {
  return entries_[atom * module_->fiber_dim() + coord];
}

std::span<const double> FiberField::fiber(std::size_t atom) const {
  return std::span<const double>(entries_.data() + atom * module_->fiber_dim(),
                                 module_->fiber_dim());
}

bool FiberField::is_zero() const {
  for (double v : entries_)
    if (v != 0.0) return false;
  return true;
}

ModuleElement ModuleElement::zero(const RNModulePtr& module) {
  return ModuleElement(module, zero_data(module));
}

RandomFunctional RandomFunctional::zero(const RNModulePtr& module) {
  return RandomFunctional(module, zero_data(module));
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  require_same_module(a, b, "ModuleElement::operator+");
  std::vector<double> v(a.flat().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.flat()[i] + b.flat()[i];
  return ModuleElement(a.module(), std::move(v));
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  require_same_module(a, b, "ModuleElement::operator-");
  std::vector<double> v(a.flat().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.flat()[i] - b.flat()[i];
  return ModuleElement(a.module(), std::move(v));
}

ModuleElement operator*(double c, const ModuleElement& a) {
  std::vector<double> v(a.flat().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.flat()[i];
  return ModuleElement(a.module(), std::move(v));
}

ModuleElement scale_by(const RandomVariable& xi, const ModuleElement& a) {
  if (!same_space(xi.space(), a.module()->space()))
    throw DimensionError("scale_by: scalar field lives on another space");
  std::vector<double> v(a.flat().size());
  const std::size_t n = a.fiber_dim();
  for (std::size_t i = 0; i < a.atom_count(); ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = xi[i] * a(i, j);
  return ModuleElement(a.module(), std::move(v));
}

RandomVariable random_norm(const ModuleElement& x) {
  const auto& mod = *x.module();
  std::vector<double> v(mod.atom_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod.fiber_norm(i, x.fiber(i));
  return RandomVariable(mod.space(), std::move(v));
}

RnAxiomReport validate_rn_axioms(const RNModulePtr& module, int sample_count,
                                 std::uint64_t seed) {
  RnAxiomReport out;
  auto flag = [&](const std::string& s) {
    out.ok = false;
    out.violations.push_back(s);
  };
  const std::size_t m = module->atom_count();
  const std::size_t n = module->fiber_dim();
  Rng rng(seed);

  const auto sample = [&]() {
    std::vector<double> v(m * n);
    for (double& e : v) e = rng.normal();
    return ModuleElement(module, std::move(v));
  };

  const RandomVariable zero_norm = random_norm(ModuleElement::zero(module));
  if (zero_norm.max_abs() != 0.0) flag("definiteness: theta has a nonzero norm");

  int homogeneity_bad = 0;
  int triangle_bad = 0;
  int definite_bad = 0;
  for (int s = 0; s < sample_count; ++s) {
    const ModuleElement x = sample();
    const ModuleElement y = sample();
    std::vector<double> xi_vals(m);
    for (double& e : xi_vals) e = 3.0 * rng.normal();
    const RandomVariable xi(module->space(), std::move(xi_vals));

    const RandomVariable nx = random_norm(x);
    const RandomVariable ny = random_norm(y);
    const RandomVariable nxy = random_norm(x + y);
    const RandomVariable nsx = random_norm(scale_by(xi, x));
    for (std::size_t i = 0; i < m; ++i) {
      const double scale = std::max({1.0, nx[i], ny[i]});
      if (std::fabs(nsx[i] - std::fabs(xi[i]) * nx[i]) >
          1e-10 * std::max(1.0, std::fabs(xi[i]) * nx[i]))
        ++homogeneity_bad;
      if (nxy[i] > nx[i] + ny[i] + 1e-10 * scale) ++triangle_bad;
      bool fiber_zero = true;
      for (std::size_t j = 0; j < n; ++j)
        if (x(i, j) != 0.0) fiber_zero = false;
      if (!fiber_zero && !(nx[i] > 0.0)) ++definite_bad;
    }
  }
  if (homogeneity_bad > 0) {
    std::ostringstream os;
    os << "homogeneity: ||xi x|| != |xi| ||x|| at " << homogeneity_bad << " sampled atoms";
    flag(os.str());
  }
  if (triangle_bad > 0) {
    std::ostringstream os;
    os << "triangle: ||x + y|| > ||x|| + ||y|| at " << triangle_bad << " sampled atoms";
    flag(os.str());
  }
  if (definite_bad > 0) {
    std::ostringstream os;
    os << "definiteness: nonzero fiber with zero norm at " << definite_bad
       << " sampled atoms";
    flag(os.str());
  }
  return out;
}

EventClass b_set(const ModuleElement& x, const ModuleElement& y) {
  require_same_module(x, y, "b_set");
  const EventClass a_x = support(random_norm(x));
  const EventClass a_y = support(random_norm(y));
  const EventClass a_d = support(random_norm(x - y));
  return a_x.intersect(a_y).intersect(a_d);
}

ModuleElement normalize_to_sphere(const ModuleElement& x) {
  if (x.is_zero())
    throw ArgumentError("normalize_to_sphere: the zero element has no direction");
  const RandomVariable nx = random_norm(x);
  std::vector<double> v(x.flat().size(), 0.0);
  const std::size_t n = x.fiber_dim();
  for (std::size_t i = 0; i < x.atom_count(); ++i) {
    if (nx[i] > 0.0)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = x(i, j) / nx[i];
  }
  return ModuleElement(x.module(), std::move(v));
}

RandomVariable apply_functional(const RandomFunctional& f, const ModuleElement& x) {
  require_same_module(f, x, "apply_functional");
  const std::size_t n = f.fiber_dim();
  std::vector<double> v(f.atom_count(), 0.0);
  for (std::size_t i = 0; i < f.atom_count(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += f(i, j) * x(i, j);
    v[i] = acc;
  }
  return RandomVariable(f.module()->space(), std::move(v));
}

RandomVariable dual_random_norm(const RandomFunctional& f) {
  const auto& mod = *f.module();
  std::vector<double> v(mod.atom_count(), 0.0);
  for (std::size_t i = 0; i < mod.atom_count(); ++i) {
    const double q = mod.dual_exponent(i);
    const auto fib = f.fiber(i);
    if (q == kInf) {
      double m = 0.0;
      for (double x : fib) m = std::max(m, std::fabs(x));
      v[i] = m;
    } else if (q == 1.0) {
      double s = 0.0;
      for (double x : fib) s += std::fabs(x);
      v[i] = s;
    } else {
      double s = 0.0;
      for (double x : fib) s += std::pow(std::fabs(x), q);
      v[i] = std::pow(s, 1.0 / q);
    }
  }
  return RandomVariable(mod.space(), std::move(v));
}

RandomVariable dual_norm_oracle(const RandomFunctional& f, std::size_t samples,
                                std::uint64_t seed) {
  const auto& mod = *f.module();
  const std::size_t n = mod.fiber_dim();
  if (n > 4) throw ScaleError("dual_norm_oracle: brute force is capped at four dims");
  Rng rng(seed);

  // Vertex candidates shared across atoms: +-e_j and all sign patterns.
  std::vector<std::vector<double>> vertices;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    vertices.push_back(e);
  }
  const std::size_t patterns = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = (mask >> j) & 1 ? -1.0 : 1.0;
    vertices.push_back(std::move(v));
  }

  std::vector<double> best(mod.atom_count(), 0.0);
  std::vector<std::vector<double>> best_u(mod.atom_count(),
                                          std::vector<double>(n, 0.0));
  const auto score = [&](std::size_t atom, std::span<const double> u) {
    const double nu = mod.fiber_norm(atom, u);
    if (!(nu > 0.0)) return 0.0;
    double dot = 0.0;
    for (std::size_t j = 0; j < n; ++j) dot += u[j] * f(atom, j);
    return std::fabs(dot) / nu;
  };
  const auto consider = [&](std::size_t atom, std::span<const double> u) {
    const double s = score(atom, u);
    if (s > best[atom]) {
      best[atom] = s;
      best_u[atom].assign(u.begin(), u.end());
    }
  };

  for (std::size_t i = 0; i < mod.atom_count(); ++i)
    for (const auto& v : vertices) consider(i, v);

  std::vector<double> u(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < n; ++j) u[j] = rng.normal();
    for (std::size_t i = 0; i < mod.atom_count(); ++i) consider(i, u);
  }

  // Coordinate polish on the incumbent direction: sampling alone stalls a
  // few digits short on curved unit balls.
  for (std::size_t i = 0; i < mod.atom_count(); ++i) {
    double step = 0.25;
    std::vector<double> trial(n);
    while (step > 1e-12) {
      bool improved = false;
      for (std::size_t j = 0; j < n; ++j) {
        for (double sign : {1.0, -1.0}) {
          trial = best_u[i];
          trial[j] += sign * step * std::max(1.0, std::fabs(trial[j]));
          const double s = score(i, trial);
          if (s > best[i]) {
            best[i] = s;
            best_u[i] = trial;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }
  return RandomVariable(mod.space(), std::move(best));
}

ModuleElement norming_field(const RandomFunctional& f) {
  const auto& mod = *f.module();
  const std::size_t n = mod.fiber_dim();
  std::vector<double> out(f.flat().size(), 0.0);
  for (std::size_t i = 0; i < mod.atom_count(); ++i) {
    const double p = mod.fiber_p(i);
    const auto fib = f.fiber(i);
    double* u = out.data() + i * n;
    if (p == kInf) {
      // q = 1: align signs everywhere.
      for (std::size_t j = 0; j < n; ++j) u[j] = sign_of(fib[j]);
    } else if (p == 1.0) {
      // q = inf: all mass on a largest coordinate, lowest index on ties.
      std::size_t bestj = 0;
      for (std::size_t j = 1; j < n; ++j)
        if (std::fabs(fib[j]) > std::fabs(fib[bestj])) bestj = j;
      if (fib[bestj] != 0.0) u[bestj] = sign_of(fib[bestj]);
    } else {
      const double q = mod.dual_exponent(i);
      double nq = 0.0;
      for (std::size_t j = 0; j < n; ++j) nq += std::pow(std::fabs(fib[j]), q);
      nq = std::pow(nq, 1.0 / q);
      if (nq > 0.0) {
        const double denom = std::pow(nq, q - 1.0);
        for (std::size_t j = 0; j < n; ++j)
          u[j] = sign_of(fib[j]) * std::pow(std::fabs(fib[j]), q - 1.0) / denom;
      }
    }
  }
  return ModuleElement(f.module(), std::move(out));
}

BoundedAwayField::BoundedAwayField(ProbSpacePtr space, std::vector<double> values,
                                   double cap)
    : space_(std::move(space)), values_(std::move(values)), cap_(cap) {
  if (!space_) throw ArgumentError("BoundedAwayField: null space");
  if (values_.size() != space_->atom_count())
    throw DimensionError("BoundedAwayField: one value per atom required");
  if (cap != 1.0 && cap != 2.0)
    throw ArgumentError("BoundedAwayField: cap must be 1 or 2");
  double lo = kInf;
  for (double v : values_) {
    if (std::isnan(v) || v <= 0.0)
      throw ArgumentError("BoundedAwayField: values must be strictly positive");
    if (v > cap) throw ArgumentError("BoundedAwayField: value exceeds the cap");
    lo = std::min(lo, v);
  }
  lower_bound_ = lo;
}

BoundedAwayField BoundedAwayField::constant(ProbSpacePtr space, double value,
                                            double cap) {
  const std::size_t m = space ? space->atom_count() : 0;
  return BoundedAwayField(std::move(space), std::vector<double>(m, value), cap);
}

FullSupport full_support_indicator(const RNModulePtr& module) {
  std::vector<double> v(module->atom_count() * module->fiber_dim(), 0.0);
  const std::size_t n = module->fiber_dim();
  for (std::size_t i = 0; i < module->atom_count(); ++i) v[i * n] = 1.0;
  ModuleElement e1(module, std::move(v));
  // e1 has unit fiber norm under every l_p, but normalize anyway so the
  // construction survives other norm shapes.
  return FullSupport{EventClass::all(module->atom_count()),
                     normalize_to_sphere(e1)};
}

}  // namespace orlicz
