#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

void require_nonnegative_t(double t, const char* who) {
  if (!(t >= 0.0)) throw ArgumentError(std::string(who) + ": t must be nonnegative");
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) throw ArgumentError("conjugate_exponent: p must be >= 1");
  if (p == 1.0) return kInf;
  return p / (p - 1.0);
}

YoungFunction YoungFunction::power(double p) {
  if (!std::isfinite(p) || !(p >= 1.0))
    throw ArgumentError("YoungFunction::power: exponent must be finite and >= 1");
  YoungFunction f;
  f.form_ = Form::power;
  f.coef_ = 1.0;
  f.exponent_ = p;
  f.q_ = conjugate_exponent(p);
  return f;
}

YoungFunction YoungFunction::scaled_power(double coef, double p) {
  if (!std::isfinite(coef) || !(coef > 0.0))
    throw ArgumentError("YoungFunction::scaled_power: coefficient must be positive");
  if (!std::isfinite(p) || !(p >= 1.0))
    throw ArgumentError("YoungFunction::scaled_power: exponent must be finite and >= 1");
  YoungFunction f;
  f.form_ = Form::scaled_power;
  f.coef_ = coef;
  f.exponent_ = p;
  f.q_ = conjugate_exponent(p);
  return f;
}

YoungFunction YoungFunction::linear_jump(double t0) {
  if (!std::isfinite(t0) || !(t0 > 0.0))
    throw ArgumentError("YoungFunction::linear_jump: threshold must be positive");
  YoungFunction f;
  f.form_ = Form::linear_jump;
  f.t0_ = t0;
  return f;
}

YoungFunction YoungFunction::piecewise_linear(std::vector<double> breaks,
                                              std::vector<double> slopes) {
  const bool jumps = slopes.size() == breaks.size();
  if (!jumps && slopes.size() != breaks.size() + 1)
    throw ArgumentError(
        "YoungFunction::piecewise_linear: need one slope per segment "
        "(breaks+1 slopes, or breaks slopes for a jump after the last break)");
  if (jumps && breaks.empty())
    throw ArgumentError("YoungFunction::piecewise_linear: a jump needs a breakpoint");
  if (slopes.empty())
    throw ArgumentError("YoungFunction::piecewise_linear: needs at least one slope");
  double prev = 0.0;
  for (double b : breaks) {
    if (!std::isfinite(b) || !(b > prev))
      throw ArgumentError(
          "YoungFunction::piecewise_linear: breakpoints must be positive and "
          "strictly increasing");
    prev = b;
  }
  for (double s : slopes)
    if (!std::isfinite(s) || s < 0.0)
      throw ArgumentError(
          "YoungFunction::piecewise_linear: slopes must be finite and nonnegative");
  YoungFunction f;
  f.form_ = Form::piecewise_linear;
  f.breaks_ = std::move(breaks);
  f.slopes_ = std::move(slopes);
  f.tail_ = jumps ? Tail::jump : Tail::linear;
  return f;
}

YoungFunction YoungFunction::tabulated(std::vector<double> t, std::vector<double> y,
                                       Tail tail) {
  if (t.size() != y.size())
    throw ArgumentError("YoungFunction::tabulated: t and y sizes differ");
  if (t.size() < 2)
    throw ArgumentError("YoungFunction::tabulated: needs at least two samples");
  if (t.front() != 0.0)
    throw ArgumentError("YoungFunction::tabulated: grid must start at t = 0");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i]) || !std::isfinite(y[i]))
      throw ArgumentError("YoungFunction::tabulated: samples must be finite");
    if (i > 0 && !(t[i] > t[i - 1]))
      throw ArgumentError("YoungFunction::tabulated: grid must be strictly increasing");
  }
  YoungFunction f;
  f.form_ = Form::tabulated;
  f.grid_t_ = std::move(t);
  f.grid_y_ = std::move(y);
  f.tail_ = tail;
  return f;
}

double YoungFunction::eval_piecewise(double t) const {
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    const double seg_end = i < breaks_.size() ? breaks_[i] : kInf;
    if (t <= seg_end) return acc + slopes_[i] * (t - prev);
    acc += slopes_[i] * (seg_end - prev);
    prev = seg_end;
  }
  // Only the jump variant falls through: t lies past the last breakpoint.
  return kInf;
}

double YoungFunction::eval_tabulated(double t) const {
  if (t >= grid_t_.back()) {
    if (t == grid_t_.back()) return grid_y_.back();
    if (tail_ == Tail::jump) return kInf;
    const std::size_t n = grid_t_.size();
    const double m =
        (grid_y_[n - 1] - grid_y_[n - 2]) / (grid_t_[n - 1] - grid_t_[n - 2]);
    return grid_y_.back() + m * (t - grid_t_.back());
  }
  const auto it = std::upper_bound(grid_t_.begin(), grid_t_.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - grid_t_.begin());
  const double w = (t - grid_t_[j - 1]) / (grid_t_[j] - grid_t_[j - 1]);
  return grid_y_[j - 1] + w * (grid_y_[j] - grid_y_[j - 1]);
}

double YoungFunction::operator()(double t) const {
  require_nonnegative_t(t, "YoungFunction::operator()");
  switch (form_) {
    case Form::power:
    case Form::scaled_power:
      return coef_ * std::pow(t, exponent_);
    case Form::linear_jump:
      return t <= t0_ ? 0.0 : kInf;
    case Form::piecewise_linear:
      return eval_piecewise(t);
    case Form::tabulated:
      return eval_tabulated(t);
  }
  throw Error("YoungFunction: unreachable form");
}

bool YoungFunction::finite_everywhere() const { return !jump_point().has_value(); }

std::optional<double> YoungFunction::jump_point() const {
  switch (form_) {
    case Form::power:
    case Form::scaled_power:
      return std::nullopt;
    case Form::linear_jump:
      return t0_;
    case Form::piecewise_linear:
      return tail_ == Tail::jump ? std::optional<double>(breaks_.back()) : std::nullopt;
    case Form::tabulated:
      return tail_ == Tail::jump ? std::optional<double>(grid_t_.back()) : std::nullopt;
  }
  return std::nullopt;
}

double YoungFunction::inverse(double y) const {
  if (!(y >= 0.0)) throw ArgumentError("YoungFunction::inverse: y must be nonnegative");
  switch (form_) {
    case Form::power:
    case Form::scaled_power:
      return std::pow(y / coef_, 1.0 / exponent_);
    case Form::linear_jump:
      return t0_;
    case Form::piecewise_linear:
    case Form::tabulated:
      break;
  }
  const std::optional<double> jump = jump_point();
  if ((*this)(0.0) > y) return 0.0;  // level set is empty past the origin
  if (jump) {
    if ((*this)(*jump) <= y) return *jump;
  } else {
    // Identically zero with no jump: the level set has no finite supremum.
    double probe = 1.0;
    bool positive_somewhere = false;
    for (int i = 0; i < 200; ++i) {
      if ((*this)(probe) > 0.0) {
        positive_somewhere = true;
        break;
      }
      probe *= 2.0;
    }
    if (!positive_somewhere)
      throw DomainError("YoungFunction::inverse: function vanishes everywhere");
  }
  double hi = 1.0;
  if (form_ == Form::piecewise_linear && !breaks_.empty()) hi = breaks_.back();
  if (form_ == Form::tabulated) hi = grid_t_.back();
  hi = std::max(hi, 1.0);
  int guard = 0;
  while ((*this)(hi) <= y) {
    hi *= 2.0;
    if (++guard > 300) return kInf;  // bounded data that never exceeds y
  }
  return bisect_sup([&](double t) { return (*this)(t) <= y; }, 0.0, hi, 200);
}

double YoungFunction::right_derivative(double t) const {
  require_nonnegative_t(t, "YoungFunction::right_derivative");
  switch (form_) {
    case Form::power:
    case Form::scaled_power:
      if (exponent_ == 1.0) return coef_;
      return coef_ * exponent_ * std::pow(t, exponent_ - 1.0);
    case Form::linear_jump:
      if (t < t0_) return 0.0;
      if (t == t0_) return kInf;
      throw DomainError("YoungFunction::right_derivative: phi is infinite there");
    case Form::piecewise_linear: {
      const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
      const std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
      if (idx < slopes_.size()) return slopes_[idx];
      if (t == breaks_.back()) return kInf;  // jump starts just to the right
      throw DomainError("YoungFunction::right_derivative: phi is infinite there");
    }
    case Form::tabulated: {
      if (t >= grid_t_.back()) {
        const std::size_t n = grid_t_.size();
        const double m =
            (grid_y_[n - 1] - grid_y_[n - 2]) / (grid_t_[n - 1] - grid_t_[n - 2]);
        if (tail_ == Tail::linear) return m;
        if (t == grid_t_.back()) return kInf;
        throw DomainError("YoungFunction::right_derivative: phi is infinite there");
      }
      const auto it = std::upper_bound(grid_t_.begin(), grid_t_.end(), t);
      const std::size_t j = static_cast<std::size_t>(it - grid_t_.begin());
      return (grid_y_[j] - grid_y_[j - 1]) / (grid_t_[j] - grid_t_[j - 1]);
    }
  }
  throw Error("YoungFunction: unreachable form");
}

YoungFunction YoungFunction::conjugate() const {
  switch (form_) {
    case Form::power:
    case Form::scaled_power: {
      if (exponent_ == 1.0) return linear_jump(coef_);
      // sup_t { t*s - c*t^p } = (c*p)^(1-q) / q * s^q.
      const double c = std::pow(coef_ * exponent_, 1.0 - q_) / q_;
      return scaled_power(c, q_);
    }
    case Form::linear_jump:
      return scaled_power(t0_, 1.0);
    case Form::piecewise_linear:
    case Form::tabulated: {
      const YoungValidity v = validate();
      if (!v.valid) {
        std::string msg = "YoungFunction::conjugate: input fails validation:";
        for (const auto& s : v.violations) msg += " [" + s + "]";
        throw ValidationError(msg);
      }
      return conjugate_numeric();
    }
  }
  throw Error("YoungFunction: unreachable form");
}

// Numeric Legendre transform for the grid-backed families. The objective
// g(t) = s*t - phi(t) is concave in t, so a coarse grid argmax plus golden
// refinement around it pins each psi(s) to near machine precision; the only
// approximation left is the linear interpolation between s samples.
YoungFunction YoungFunction::conjugate_numeric() const {
  const std::optional<double> jump = jump_point();
  double domain_end;
  if (form_ == Form::piecewise_linear)
    domain_end = breaks_.empty() ? 1.0 : breaks_.back();
  else
    domain_end = grid_t_.back();

  // Largest finite slope of phi; the conjugate is finite up to it.
  double last_slope;
  if (form_ == Form::piecewise_linear)
    last_slope = slopes_.back();
  else {
    const std::size_t n = grid_t_.size();
    last_slope = (grid_y_[n - 1] - grid_y_[n - 2]) / (grid_t_[n - 1] - grid_t_[n - 2]);
  }

  double s_hi;
  Tail out_tail;
  if (jump) {
    // Beyond the largest finite slope the conjugate is exactly linear with
    // slope equal to the jump point; tabulate a little past the kink so the
    // linear tail extension is exact.
    s_hi = last_slope * 1.25 + 1.0;
    out_tail = Tail::linear;
  } else {
    // phi grows at asymptotic rate last_slope, so the conjugate is finite on
    // [0, last_slope] and jumps to +inf beyond.
    s_hi = last_slope;
    out_tail = Tail::jump;
  }

  const double t_max = jump ? *jump : domain_end;
  std::vector<double> t_grid;
  t_grid.reserve(4200);
  t_grid.push_back(0.0);
  for (double t : log_grid(t_max * 1e-12, t_max, 4096)) t_grid.push_back(t);
  // The suprema sit at breakpoints of phi; make sure they are all probed.
  if (form_ == Form::piecewise_linear)
    for (double b : breaks_) t_grid.push_back(b);
  else
    for (double t : grid_t_) t_grid.push_back(t);
  std::sort(t_grid.begin(), t_grid.end());
  t_grid.erase(std::unique(t_grid.begin(), t_grid.end()), t_grid.end());
  while (!t_grid.empty() && t_grid.back() > t_max) t_grid.pop_back();

  // The conjugate of a piecewise linear function is piecewise linear with
  // kinks exactly at the input slopes. Tabulating on those nodes (plus a
  // uniform fill) makes the transform exact for the grid-backed families
  // up to the refinement tolerance.
  std::vector<double> s_grid = linear_grid(0.0, s_hi, 513);
  if (form_ == Form::piecewise_linear) {
    for (double s : slopes_) s_grid.push_back(s);
  } else {
    for (std::size_t i = 0; i + 1 < grid_t_.size(); ++i)
      s_grid.push_back((grid_y_[i + 1] - grid_y_[i]) / (grid_t_[i + 1] - grid_t_[i]));
  }
  std::sort(s_grid.begin(), s_grid.end());
  std::vector<double> keep;
  keep.reserve(s_grid.size());
  for (double s : s_grid) {
    if (s < 0.0 || s > s_hi) continue;
    if (!keep.empty() && s - keep.back() <= 1e-15 * std::max(1.0, s_hi)) continue;
    keep.push_back(s);
  }
  s_grid = std::move(keep);
  if (s_grid.front() != 0.0) s_grid.insert(s_grid.begin(), 0.0);
  std::vector<double> psi(s_grid.size(), 0.0);

  std::size_t arg = 0;  // argmax index marches forward as s grows
  for (std::size_t si = 0; si < s_grid.size(); ++si) {
    const double s = s_grid[si];
    const auto g = [&](double t) { return s * t - (*this)(t); };
    double best = g(t_grid[arg]);
    while (arg + 1 < t_grid.size()) {
      const double cand = g(t_grid[arg + 1]);
      if (cand >= best) {
        best = cand;
        ++arg;
      } else {
        break;
      }
    }
    const double lo = t_grid[arg == 0 ? 0 : arg - 1];
    const double hi = t_grid[std::min(arg + 1, t_grid.size() - 1)];
    const GoldenResult r = golden_min([&](double t) { return -g(t); }, lo, hi, 80);
    psi[si] = std::max({0.0, best, -r.value});
  }
  return tabulated(std::vector<double>(s_grid), std::move(psi), out_tail);
}

YoungValidity YoungFunction::validate() const {
  YoungValidity out;
  auto flag = [&](const std::string& s) {
    out.valid = false;
    out.violations.push_back(s);
  };

  const double at_zero = (*this)(0.0);
  if (at_zero != 0.0) flag("origin: phi(0) = " + fmt(at_zero) + ", must be 0");

  // Sample grid over the finite domain.
  const std::optional<double> jump = jump_point();
  double hi = 10.0;
  std::vector<double> pts;
  switch (form_) {
    case Form::power:
    case Form::scaled_power:
      break;
    case Form::linear_jump:
      hi = t0_;
      break;
    case Form::piecewise_linear:
      hi = breaks_.empty() ? 10.0 : (jump ? breaks_.back() : breaks_.back() * 2.0);
      for (double b : breaks_) pts.push_back(b);
      break;
    case Form::tabulated:
      hi = jump ? grid_t_.back() : grid_t_.back() * 2.0;
      for (double t : grid_t_) pts.push_back(t);
      break;
  }
  for (double t : linear_grid(0.0, hi, 129)) pts.push_back(t);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  bool monotone_ok = true;
  for (std::size_t i = 0; i + 1 < pts.size() && monotone_ok; ++i) {
    const double a = (*this)(pts[i]);
    const double b = (*this)(pts[i + 1]);
    if (a == kInf || b == kInf) continue;
    if (b < a - 1e-12 * std::max(1.0, std::fabs(a))) {
      flag("monotonicity: phi(" + fmt(pts[i + 1]) + ") < phi(" + fmt(pts[i]) + ")");
      monotone_ok = false;
    }
  }

  bool convex_ok = true;
  for (std::size_t span : {2u, 8u, 32u}) {
    for (std::size_t i = 0; i + span < pts.size() && convex_ok; ++i) {
      const double a = pts[i];
      const double b = pts[i + span];
      const double fa = (*this)(a);
      const double fb = (*this)(b);
      if (fa == kInf || fb == kInf) continue;
      const double fm = (*this)(0.5 * (a + b));
      const double bound = 0.5 * (fa + fb);
      if (fm > bound + 1e-9 * std::max(1.0, std::fabs(bound))) {
        flag("convexity: midpoint above chord near t = " + fmt(0.5 * (a + b)));
        convex_ok = false;
      }
    }
    if (!convex_ok) break;
  }

  if (jump && (*this)(*jump) == kInf)
    flag("left continuity: phi infinite at its own jump point");

  bool diverges = true;
  switch (form_) {
    case Form::power:
    case Form::scaled_power:
    case Form::linear_jump:
      break;  // analytic: always diverges
    case Form::piecewise_linear:
      if (!jump && slopes_.back() <= 0.0) diverges = false;
      break;
    case Form::tabulated:
      if (!jump) {
        const std::size_t n = grid_t_.size();
        const double m =
            (grid_y_[n - 1] - grid_y_[n - 2]) / (grid_t_[n - 1] - grid_t_[n - 2]);
        if (m <= 0.0) diverges = false;
      }
      break;
  }
  if (!diverges) flag("divergence: phi stays bounded as t grows");

  return out;
}

Delta2 YoungFunction::delta2() const {
  switch (form_) {
    case Form::power:
    case Form::scaled_power:
      return Delta2::yes;
    case Form::linear_jump:
      return Delta2::no;
    case Form::piecewise_linear:
    case Form::tabulated:
      break;
  }
  if (jump_point()) return Delta2::no;

  // Sampled doubling ratios over the top of the available data. The bound
  // 64 admits power-like growth up to exponent six; anything wilder on the
  // window stays unproven.
  const double domain_end =
      form_ == Form::piecewise_linear
          ? (breaks_.empty() ? 8.0 : breaks_.back() * 2.0)
          : grid_t_.back() / 2.0;
  if (!(domain_end > 0.0)) return Delta2::unknown;
  double worst = 0.0;
  for (double t : log_grid(domain_end / 64.0, domain_end, 257)) {
    const double a = (*this)(t);
    const double b = (*this)(2.0 * t);
    if (a <= 0.0) {
      if (b > 0.0) return Delta2::unknown;
      continue;
    }
    worst = std::max(worst, b / a);
  }
  return worst <= 64.0 ? Delta2::yes : Delta2::unknown;
}

std::optional<double> YoungFunction::delta2_witness() const {
  if (delta2() != Delta2::no) return std::nullopt;
  const std::optional<double> jump = jump_point();
  // phi(t) finite while phi(2t) is infinite.
  return 0.75 * *jump;
}

double YoungFunction::power_exponent() const {
  if (form_ != Form::power && form_ != Form::scaled_power)
    throw ArgumentError("YoungFunction::power_exponent: not a power family");
  return exponent_;
}

double YoungFunction::power_coef() const {
  if (form_ != Form::power && form_ != Form::scaled_power)
    throw ArgumentError("YoungFunction::power_coef: not a power family");
  return coef_;
}

double YoungFunction::power_conjugate_exponent() const {
  if (form_ != Form::power && form_ != Form::scaled_power)
    throw ArgumentError("YoungFunction::power_conjugate_exponent: not a power family");
  return q_;
}

double YoungFunction::jump_threshold() const {
  if (form_ != Form::linear_jump)
    throw ArgumentError("YoungFunction::jump_threshold: not a linear_jump");
  return t0_;
}

const std::vector<double>& YoungFunction::breaks() const {
  if (form_ != Form::piecewise_linear)
    throw ArgumentError("YoungFunction::breaks: not piecewise linear");
  return breaks_;
}

const std::vector<double>& YoungFunction::slopes() const {
  if (form_ != Form::piecewise_linear)
    throw ArgumentError("YoungFunction::slopes: not piecewise linear");
  return slopes_;
}

const std::vector<double>& YoungFunction::grid_t() const {
  if (form_ != Form::tabulated)
    throw ArgumentError("YoungFunction::grid_t: not tabulated");
  return grid_t_;
}

const std::vector<double>& YoungFunction::grid_y() const {
  if (form_ != Form::tabulated)
    throw ArgumentError("YoungFunction::grid_y: not tabulated");
  return grid_y_;
}

YoungFunction::Tail YoungFunction::tail() const {
  if (form_ != Form::piecewise_linear && form_ != Form::tabulated)
    throw ArgumentError("YoungFunction::tail: form has no tail");
  return tail_;
}

}  // namespace orlicz
