#pragma once

#include <optional>
#include <string>
#include <vector>

namespace orlicz {

// Tri-state answer of the doubling-growth check. The sampled branch can
// prove nothing universal, so "unknown" is an honest outcome.
enum class Delta2 { yes, no, unknown };

struct YoungValidity {
  bool valid = true;
  std::vector<std::string> violations;
};

// Convex nondecreasing phi: [0, inf) -> [0, inf] with phi(0) = 0, left
// continuity at a jump, and phi(t) -> inf. Extended values are IEEE +inf.
//
// Families:
//   power(p)                  t^p, p >= 1
//   scaled_power(c, p)        c * t^p, c > 0, p >= 1
//   linear_jump(t0)           0 on [0, t0], +inf beyond
//   piecewise_linear(b, s)    segment slopes s over breakpoints b; when
//                             s.size() == b.size() the function jumps to
//                             +inf after the last breakpoint
//   tabulated(t, y, tail)     linear interpolation of samples; past the
//                             grid either the last slope continues or the
//                             function jumps to +inf
//
// Constructors enforce structural requirements (ranges, ordering, sizes).
// Axiom violations expressible in the data (nonzero origin, concave kink,
// decreasing samples) are allowed through so validate() can report them.
class YoungFunction {
public:
  enum class Form { power, scaled_power, linear_jump, piecewise_linear, tabulated };
  enum class Tail { linear, jump };

  static YoungFunction power(double p);
  static YoungFunction scaled_power(double coef, double p);
  static YoungFunction linear_jump(double t0);
  static YoungFunction piecewise_linear(std::vector<double> breaks,
                                        std::vector<double> slopes);
  static YoungFunction tabulated(std::vector<double> t, std::vector<double> y,
                                 Tail tail = Tail::linear);

  Form form() const { return form_; }

  // Evaluation; +inf past a jump, ArgumentError for negative t.
  double operator()(double t) const;

  bool finite_everywhere() const;
  // End of the finite domain when the function jumps to +inf.
  std::optional<double> jump_point() const;

  // Generalized inverse sup{t >= 0 : phi(t) <= y} for y >= 0. DomainError
  // when phi vanishes on its whole finite domain and never jumps.
  double inverse(double y) const;

  // Right derivative at t >= 0; +inf at the edge of a jump, DomainError
  // where phi itself is +inf.
  double right_derivative(double t) const;

  // Legendre conjugate psi(s) = sup_t { t*s - phi(t) }. Closed form for
  // power / scaled_power / linear_jump, numeric transform (tabulated
  // result) for the grid-backed families. ValidationError when validate()
  // rejects the input.
  YoungFunction conjugate() const;

  YoungValidity validate() const;

  Delta2 delta2() const;
  // Witness t with phi(t) finite and phi(2t) = +inf (or phi(t) = 0 < phi(2t));
  // present only when delta2() == no.
  std::optional<double> delta2_witness() const;

  // Closed-form family accessors; ArgumentError when the form disagrees.
  double power_exponent() const;
  double power_coef() const;
  // Conjugate exponent q with 1/p + 1/q = 1 (inf when p = 1).
  double power_conjugate_exponent() const;
  double jump_threshold() const;
  const std::vector<double>& breaks() const;
  const std::vector<double>& slopes() const;
  const std::vector<double>& grid_t() const;
  const std::vector<double>& grid_y() const;
  Tail tail() const;

private:
  YoungFunction() = default;

  double eval_piecewise(double t) const;
  double eval_tabulated(double t) const;
  YoungFunction conjugate_numeric() const;

  Form form_ = Form::power;
  double coef_ = 1.0;     // power families
  double exponent_ = 1.0; // power families
  double q_ = 0.0;        // conjugate exponent, stored alongside p
  double t0_ = 0.0;       // linear_jump
  std::vector<double> breaks_;
  std::vector<double> slopes_;
  std::vector<double> grid_t_;
  std::vector<double> grid_y_;
  Tail tail_ = Tail::linear;
};

double conjugate_exponent(double p);

}  // namespace orlicz
