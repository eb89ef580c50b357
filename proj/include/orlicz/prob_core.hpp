#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace orlicz {

// Finite probability space: atoms 0..m-1 with strictly positive weights
// summing to one. Everything downstream (random variables, module fields)
// holds a shared pointer to one of these.
class ProbSpace {
public:
  explicit ProbSpace(std::vector<double> weights);

  std::size_t atom_count() const { return weights_.size(); }
  double weight(std::size_t i) const;
  const std::vector<double>& weights() const { return weights_; }

private:
  std::vector<double> weights_;
};

using ProbSpacePtr = std::shared_ptr<const ProbSpace>;

ProbSpacePtr make_space(std::vector<double> weights);
ProbSpacePtr uniform_space(std::size_t atom_count);

// True when both handles describe the same space (same object or equal
// weight vectors).
bool same_space(const ProbSpacePtr& a, const ProbSpacePtr& b);

// Measurable set on a finite space: a subset of the atoms.
class EventClass {
public:
  EventClass(std::size_t atom_count, std::vector<std::size_t> members);
  static EventClass all(std::size_t atom_count);
  static EventClass none(std::size_t atom_count);

  std::size_t atom_count() const { return atom_count_; }
  bool contains(std::size_t i) const;
  const std::vector<std::size_t>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  EventClass complement() const;
  EventClass intersect(const EventClass& other) const;
  EventClass unite(const EventClass& other) const;
  bool operator==(const EventClass& other) const;

private:
  std::size_t atom_count_;
  std::vector<std::size_t> members_;  // sorted, unique
};

// Extended-real-valued measurable function on a finite space: one value per
// atom. +inf entries are legal and propagate through expectations.
class RandomVariable {
public:
  RandomVariable(ProbSpacePtr space, std::vector<double> values);
  static RandomVariable constant(ProbSpacePtr space, double c);
  static RandomVariable zero(ProbSpacePtr space);
  static RandomVariable indicator(ProbSpacePtr space, const EventClass& a);

  const ProbSpacePtr& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  double max_abs() const;
  bool is_zero() const;

private:
  ProbSpacePtr space_;
  std::vector<double> values_;
};

RandomVariable operator+(const RandomVariable& a, const RandomVariable& b);
RandomVariable operator-(const RandomVariable& a, const RandomVariable& b);
RandomVariable operator*(double c, const RandomVariable& a);
// Atomwise product.
RandomVariable operator*(const RandomVariable& a, const RandomVariable& b);
RandomVariable abs(const RandomVariable& a);

// E[xi]; any +inf entry makes the expectation +inf.
double expectation(const RandomVariable& xi);

// Atomwise supremum of a nonempty family over a common space.
RandomVariable pointwise_sup(const std::vector<RandomVariable>& family);

// {xi > 0} for nonnegative xi.
EventClass support(const RandomVariable& xi);

// I_A * xi.
RandomVariable restrict_to(const EventClass& a, const RandomVariable& xi);

// E[|xi - eta| / (1 + |xi - eta|)], the metric of convergence in probability.
double prob_metric(const RandomVariable& xi, const RandomVariable& eta);

}  // namespace orlicz
