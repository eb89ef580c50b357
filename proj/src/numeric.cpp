#include "orlicz/numeric.hpp"

#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

std::uint64_t Rng::next_u64() {
  // splitmix64; tiny state, good enough for search seeding and sampling.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw ArgumentError("Rng::index: n must be positive");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

GoldenResult golden_min(const std::function<double(double)>& f, double a, double b,
                        int iterations) {
  if (!(a <= b)) throw ArgumentError("golden_min: interval is inverted");
  const double inv_phi = 0.6180339887498948482;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iterations && x2 - x1 > 0.0; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}

double bisect_sup(const std::function<bool(double)>& pred, double lo, double hi,
                  int iterations) {
  if (!(lo <= hi)) throw ArgumentError("bisect_sup: interval is inverted");
  if (!pred(lo)) throw ArgumentError("bisect_sup: predicate false at lower end");
  if (pred(hi)) return hi;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo)) throw ArgumentError("log_grid: need 0 < lo <= hi");
  if (count < 2) throw ArgumentError("log_grid: need at least two points");
  std::vector<double> out(count);
  const double la = std::log(lo);
  const double lb = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = std::exp(la + s * (lb - la));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (!(hi >= lo)) throw ArgumentError("linear_grid: need lo <= hi");
  if (count < 2) throw ArgumentError("linear_grid: need at least two points");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = lo + s * (hi - lo);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace orlicz
