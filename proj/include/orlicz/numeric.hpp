#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic random source. All randomized searches in the library draw
// from this so that a fixed seed reproduces a run bit for bit; the standard
// distributions are avoided on purpose (their mapping from raw bits is
// implementation defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64();

  // Uniform on [0, 1).
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller on our own uniforms.
  double normal();

  // Uniform index in [0, n).
  std::size_t index(std::size_t n);

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

// Minimizes a unimodal function on [a, b] by golden section. Tolerant of
// +inf values as long as the function is quasiconvex on the interval.
GoldenResult golden_min(const std::function<double(double)>& f, double a, double b,
                        int iterations);

// Largest t in [lo, hi] with pred(t) true, assuming pred is true at lo,
// false beyond some threshold, and monotone in between. Returns a value
// where pred holds.
double bisect_sup(const std::function<bool(double)>& pred, double lo, double hi,
                  int iterations);

// FNV-1a 64-bit hash of a byte string, for stamping reports with the exact
// scenario that produced them.
std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

// Log-spaced grid over [lo, hi], lo > 0, endpoints included.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

// Uniform grid over [lo, hi], endpoints included.
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

}  // namespace orlicz
