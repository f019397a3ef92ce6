#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace gnbg {

// Deterministic random source used everywhere in this project.
//
// All floating-point draws are derived from the raw 64-bit engine output by
// fixed arithmetic, never through std::*_distribution (whose results differ
// between standard libraries). Given a seed, every draw sequence is therefore
// identical across platforms and compilers.
//
// Draw costs are part of the contract, since instance construction documents
// its draw order:
//   uniform01 / uniform  : one engine draw (plus rare rejections, see below)
//   uniform_int(n)       : one engine draw, rejection for unbiasedness
//   gaussian             : exactly two uniform draws (Box-Muller, cosine leg)
//   beta                 : two uniforms per Johnk trial, retried on rejection
//   permutation(n)       : n-1 uniform_int draws (Fisher-Yates, back to front)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed, 0x9e3779b97f4a7c15ULL)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Strictly inside (0, 1): (k + 0.5) * 2^-53 with k in [0, 2^53).
  double uniform01() {
    const std::uint64_t k = next_u64() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1p-53;
  }

  // Strictly inside (a, b). The interior draw plus the nextafter guard keeps
  // sampled parameters off interval endpoints even after rounding.
  double uniform(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("Rng::uniform: empty range");
    double v = a + (b - a) * uniform01();
    if (v <= a) v = std::nextafter(a, b);
    if (v >= b) v = std::nextafter(b, a);
    return v;
  }

  // Uniform in (a, b) excluding exact zero; used for rotation angles where a
  // drawn entry must stay distinguishable from a structural zero.
  double nonzero_uniform(double a, double b) {
    double v = uniform(a, b);
    while (v == 0.0) v = uniform(a, b);
    return v;
  }

  // Unbiased integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::uniform_int: n must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Beta(alpha, beta) by Johnk's rejection method, valid for shape
  // parameters <= 1. Result strictly inside (0, 1).
  double beta(double alpha, double beta_param) {
    if (!(alpha > 0.0) || !(beta_param > 0.0))
      throw std::invalid_argument("Rng::beta: shape parameters must be positive");
    for (;;) {
      const double x = std::pow(uniform01(), 1.0 / alpha);
      const double y = std::pow(uniform01(), 1.0 / beta_param);
      if (x + y <= 1.0 && x + y > 0.0) {
        const double r = x / (x + y);
        if (r > 0.0 && r < 1.0) return r;
      }
    }
  }

  // Fisher-Yates shuffle of 0..n-1.
  std::vector<int> permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(uniform_int(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
  }

  // splitmix64-style combiner; used to derive independent substream seeds
  // (e.g. per instance id or per run index) from one user seed.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gnbg
