#pragma once

#include "limitset/types.hpp"

#include <cstdint>
#include <random>

namespace limitset {

// Mixes a seed with a stream index so parallel stages draw from disjoint,
// reproducible streams regardless of worker count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic generator: mt19937_64 plus explicit conversions, so the same
// seed yields the same doubles on every platform (the std distributions are
// implementation-defined and deliberately avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01();                  // [0, 1)
  double uniform(double a, double b);  // [a, b)
  std::uint64_t below(std::uint64_t n);  // unbiased integer in [0, n)
  double gaussian();
  cplx cgaussian();
  CVec gaussian_vec(int n);  // n+1 coordinates with Gaussian real/imag parts

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace limitset
