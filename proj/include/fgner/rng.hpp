#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fgner {

// Deterministic RNG wrapper. std::mt19937_64 output is pinned by the
// standard, but std::shuffle / std::uniform_int_distribution are not, so
// every bounded draw is derived here by hand to keep runs reproducible
// across compilers and platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, n). n must be > 0.
  size_t below(size_t n) { return static_cast<size_t>(next() % n); }

  // Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<size_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  // Fisher-Yates with explicit draws.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace fgner
