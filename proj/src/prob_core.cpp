#include "orlicz/prob_core.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

void require_same_space(const RandomVariable& a, const RandomVariable& b,
                        const char* who) {
  if (!same_space(a.space(), b.space()))
    throw DimensionError(std::string(who) + ": operands live on different spaces");
}

}  // namespace

ProbSpace::ProbSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ArgumentError("ProbSpace: needs at least one atom");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw ArgumentError("ProbSpace: weights must be finite and positive");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw ArgumentError("ProbSpace: weights must sum to one");
}

double ProbSpace::weight(std::size_t i) const {
  if (i >= weights_.size()) throw ArgumentError("ProbSpace::weight: atom out of range");
  return weights_[i];
}

ProbSpacePtr make_space(std::vector<double> weights) {
  return std::make_shared<const ProbSpace>(std::move(weights));
}

ProbSpacePtr uniform_space(std::size_t atom_count) {
  if (atom_count == 0) throw ArgumentError("uniform_space: needs at least one atom");
  // m * (1/m) can fall a hair off one in binary; the last weight absorbs the
  // difference so the sum-to-one invariant holds exactly.
  std::vector<double> w(atom_count, 1.0 / static_cast<double>(atom_count));
  double total = 0.0;
  for (double x : w) total += x;
  w.back() += 1.0 - total;
  return make_space(std::move(w));
}

bool same_space(const ProbSpacePtr& a, const ProbSpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->weights() == b->weights();
}

EventClass::EventClass(std::size_t atom_count, std::vector<std::size_t> members)
    : atom_count_(atom_count), members_(std::move(members)) {
  if (atom_count_ == 0) throw ArgumentError("EventClass: empty space");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= atom_count_)
    throw ArgumentError("EventClass: member index out of range");
}

EventClass EventClass::all(std::size_t atom_count) {
  std::vector<std::size_t> m(atom_count);
  for (std::size_t i = 0; i < atom_count; ++i) m[i] = i;
  return EventClass(atom_count, std::move(m));
}

EventClass EventClass::none(std::size_t atom_count) {
  return EventClass(atom_count, {});
}

bool EventClass::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

EventClass EventClass::complement() const {
  std::vector<std::size_t> out;
  out.reserve(atom_count_ - members_.size());
  for (std::size_t i = 0; i < atom_count_; ++i)
    if (!contains(i)) out.push_back(i);
  return EventClass(atom_count_, std::move(out));
}

EventClass EventClass::intersect(const EventClass& other) const {
  if (atom_count_ != other.atom_count_)
    throw DimensionError("EventClass::intersect: different spaces");
  std::vector<std::size_t> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return EventClass(atom_count_, std::move(out));
}

EventClass EventClass::unite(const EventClass& other) const {
  if (atom_count_ != other.atom_count_)
    throw DimensionError("EventClass::unite: different spaces");
  std::vector<std::size_t> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return EventClass(atom_count_, std::move(out));
}

bool EventClass::operator==(const EventClass& other) const {
  return atom_count_ == other.atom_count_ && members_ == other.members_;
}

RandomVariable::RandomVariable(ProbSpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw ArgumentError("RandomVariable: null space");
  if (values_.size() != space_->atom_count())
    throw DimensionError("RandomVariable: one value per atom required");
  for (double v : values_)
    if (std::isnan(v)) throw ArgumentError("RandomVariable: NaN entry");
}

RandomVariable RandomVariable::constant(ProbSpacePtr space, double c) {
  if (!space) throw ArgumentError("RandomVariable::constant: null space");
  return RandomVariable(space, std::vector<double>(space->atom_count(), c));
}

RandomVariable RandomVariable::zero(ProbSpacePtr space) {
  return constant(std::move(space), 0.0);
}

RandomVariable RandomVariable::indicator(ProbSpacePtr space, const EventClass& a) {
  if (!space) throw ArgumentError("RandomVariable::indicator: null space");
  if (a.atom_count() != space->atom_count())
    throw DimensionError("RandomVariable::indicator: event on a different space");
  std::vector<double> v(space->atom_count(), 0.0);
  for (std::size_t i : a.members()) v[i] = 1.0;
  return RandomVariable(std::move(space), std::move(v));
}

double RandomVariable::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

bool RandomVariable::is_zero() const {
  for (double v : values_)
    if (v != 0.0) return false;
  return true;
}

RandomVariable operator+(const RandomVariable& a, const RandomVariable& b) {
  require_same_space(a, b, "RandomVariable::operator+");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return RandomVariable(a.space(), std::move(v));
}

RandomVariable operator-(const RandomVariable& a, const RandomVariable& b) {
  require_same_space(a, b, "RandomVariable::operator-");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return RandomVariable(a.space(), std::move(v));
}

RandomVariable operator*(double c, const RandomVariable& a) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = c * a[i];
  return RandomVariable(a.space(), std::move(v));
}

RandomVariable operator*(const RandomVariable& a, const RandomVariable& b) {
  require_same_space(a, b, "RandomVariable::operator*");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] * b[i];
  return RandomVariable(a.space(), std::move(v));
}

RandomVariable abs(const RandomVariable& a) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = std::fabs(a[i]);
  return RandomVariable(a.space(), std::move(v));
}

double expectation(const RandomVariable& xi) {
  const auto& w = xi.space()->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] == kInf) return kInf;
    acc += w[i] * xi[i];
  }
  return acc;
}

RandomVariable pointwise_sup(const std::vector<RandomVariable>& family) {
  if (family.empty()) throw ArgumentError("pointwise_sup: empty family");
  RandomVariable out = family.front();
  for (std::size_t k = 1; k < family.size(); ++k) {
    require_same_space(out, family[k], "pointwise_sup");
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = std::max(out[i], family[k][i]);
  }
  return out;
}

EventClass support(const RandomVariable& xi) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] < 0.0)
      throw ArgumentError("support: requires a nonnegative random variable");
    if (xi[i] > 0.0) members.push_back(i);
  }
  return EventClass(xi.size(), std::move(members));
}

RandomVariable restrict_to(const EventClass& a, const RandomVariable& xi) {
  if (a.atom_count() != xi.size())
    throw DimensionError("restrict_to: event on a different space");
  std::vector<double> v(xi.size(), 0.0);
  for (std::size_t i : a.members()) v[i] = xi[i];
  return RandomVariable(xi.space(), std::move(v));
}

double prob_metric(const RandomVariable& xi, const RandomVariable& eta) {
  require_same_space(xi, eta, "prob_metric");
  const auto& w = xi.space()->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const double d = std::fabs(xi[i] - eta[i]);
    acc += w[i] * (d == kInf ? 1.0 : d / (1.0 + d));
  }
  return acc;
}

}  // namespace orlicz
