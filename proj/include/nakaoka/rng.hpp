#pragma once
#include <cstdint>
#include <random>

namespace nakaoka {

// All randomized suites draw through this wrapper so runs are reproducible
// from the seed alone (mt19937_64, no wall-clock anywhere).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(eng_);
  }

  std::uint64_t u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Bounds used by the sampled suites (axioms, radicality, kernel probes).
struct SampleBounds {
  int max_terms = 4;   // monomials per sampled polynomial
  int max_exp = 3;     // per-variable exponent bound
  int coeff_lo = -5;
  int coeff_hi = 5;
};

}  // namespace nakaoka
