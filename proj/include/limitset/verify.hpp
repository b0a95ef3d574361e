#pragma once

#include "limitset/rng.hpp"
#include "limitset/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace limitset {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double max_residual = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool overall_pass = false;
  std::vector<PropertyResult> properties;
  std::vector<std::string> findings;  // observations that are not failures
};

// Runs every module invariant as a randomized property check.
VerifyReport verify_suite(int trials, std::uint64_t seed, double tol);

std::string verify_report_json(const VerifyReport& rep);
std::string verify_report_text(const VerifyReport& rep);

// Samplers shared by the suite and the acceptance harness.

// Gaussian vector conditioned on f > tol * |z|^4.
CVec random_f_positive(Rng& rng, int n, double tol);

// Positive vector with parabolic conjugate span: z = x + i y with y a real
// null vector and x a positive real vector orthogonal to it, so f(z)
// vanishes to machine precision.
CVec make_parabolic_positive(Rng& rng, int n);

// Uniform draw from the coordinate ball of the given radius around center,
// treating C^{n+1} as R^{2n+2}.
CVec uniform_ball(Rng& rng, const CVec& center, double radius);

}  // namespace limitset
