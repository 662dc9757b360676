#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mammoseg {

/// Deterministic random source. mt19937 output is pinned by the standard;
/// the distributions here are hand-rolled so streams are bit-identical
/// across platforms and standard libraries (std::*_distribution is not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(static_cast<uint32_t>(seed ^ (seed >> 32))) {}

  uint32_t next_u32() { return gen_(); }

  /// Uniform double in (0,1).
  double uniform() {
    return (static_cast<double>(next_u32()) + 0.5) * 0x1p-32;
  }

  /// Uniform index in [0, n). Lemire multiply-shift; n must be > 0.
  size_t index(size_t n) {
    return static_cast<size_t>((static_cast<uint64_t>(next_u32()) * n) >> 32);
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mammoseg
