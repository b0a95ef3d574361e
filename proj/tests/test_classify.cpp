#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limitset/classify.hpp"
#include "limitset/hermitian.hpp"
#include "limitset/projective.hpp"
#include "limitset/rng.hpp"
#include "limitset/verify.hpp"

#include <cmath>
#include <cstring>

using namespace limitset;

namespace {

CVec origin(int n) {
  CVec z(n + 1, cplx{0.0, 0.0});
  z[n] = cplx{1.0, 0.0};
  return z;
}

}  // namespace

TEST_CASE("partition by the sign of f") {
  CHECK(partition_label({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}}) == PartitionLabel::UZero);
  CHECK(partition_label({cplx{0, 1}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}) == PartitionLabel::UPlus);
  CHECK(partition_label({cplx{1, 0}, cplx{0, 1}, cplx{0, 0}, cplx{0, 0}}) == PartitionLabel::UMinus);
}

TEST_CASE("labels of the reference points, equal dimensions") {
  // ball origin: negative real point, inside the discontinuity region
  CHECK(classify_equal_dim(origin(2)) == RegionLabel::OmegaZero);
  CHECK(classify_equal_dim(origin(3)) == RegionLabel::OmegaSingle);
  CHECK(classify_equal_dim(origin(5)) == RegionLabel::OmegaSingle);

  // positive real point: limit set, exterior part
  CHECK(classify_equal_dim({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}}) == RegionLabel::LambdaRealExterior);
  CHECK(classify_equal_dim({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}}) ==
        RegionLabel::LambdaRealExterior);

  // null real point
  CHECK(classify_equal_dim({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}) ==
        RegionLabel::LambdaRealExterior);

  // elliptic conjugate span: interior of the limit set, n > 2 only
  CHECK(classify_equal_dim({cplx{1, 0}, cplx{0, 1}, cplx{0, 0}, cplx{0, 0}}) ==
        RegionLabel::LambdaInterior);

  // n = 2 splits the f < 0 side by orientation
  CHECK(classify_equal_dim({cplx{1, 0}, cplx{0, 1}, cplx{0, 0}}) == RegionLabel::OmegaPlus);
  CHECK(classify_equal_dim({cplx{0, 1}, cplx{1, 0}, cplx{0, 0}}) == RegionLabel::OmegaMinus);

  // hyperbolic conjugate span
  CHECK(classify_equal_dim({cplx{0, 1}, cplx{0, 0}, cplx{1, 0}}) == RegionLabel::OmegaZero);
  CHECK(classify_equal_dim({cplx{0, 1}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}) ==
        RegionLabel::OmegaSingle);
}

TEST_CASE("parabolic boundary points") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 4;
    const CVec z = make_parabolic_positive(rng, n);
    CHECK(classify_equal_dim(z) == RegionLabel::LambdaParabolic);
  }
}

TEST_CASE("orientation splitting for n = 2") {
  CHECK(omega2_component({cplx{1, 0}, cplx{0, 1}, cplx{0, 0}}) == RegionLabel::OmegaPlus);
  CHECK(omega2_component({cplx{0, 1}, cplx{1, 0}, cplx{0, 0}}) == RegionLabel::OmegaMinus);
  CHECK(omega2_component({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}) == RegionLabel::OmegaZero);
  CHECK(omega2_component({cplx{0, 1}, cplx{0, 0}, cplx{1, 0}}) == RegionLabel::OmegaZero);
  // limit-set input violates the precondition
  CHECK_THROWS_AS(omega2_component({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(omega2_component({cplx{1, 0}, cplx{0, 1}, cplx{0, 0}, cplx{0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("classification against an embedded smaller real form") {
  // projection keeps coordinates 1..m and the last one
  CHECK(classify({cplx{1, 0}, cplx{0, 1}, cplx{5, 0}, cplx{5, 0}, cplx{0, 0}}, 2) ==
        RegionLabel::OmegaPlus);
  CHECK(classify({cplx{1, 0}, cplx{0, 1}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}}, 3) ==
        RegionLabel::LambdaInterior);
  CHECK(classify({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0, 0}}, 2) == RegionLabel::Lambda0);
  // m = n reduces to the equal-dimension classifier
  CHECK(classify(origin(2), 2) == RegionLabel::OmegaZero);

  Rng rng(19);
  for (int t = 0; t < 400; ++t) {
    const int n = 3 + t % 3;
    const int m = 2 + t % (n - 1);
    const CVec z = rng.gaussian_vec(n);
    if (in_lambda0(z, m)) continue;
    CHECK(classify(z, m) == classify_equal_dim(q_project(z, m)));
    cplx a = rng.cgaussian();
    if (std::abs(a) < 0.1) a += cplx{1, 0};
    CHECK(classify(z, m) == classify(a * z, m));
  }
}

TEST_CASE("omega labels follow the sign of f, dimension-dependently") {
  Rng rng(29);
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n);
    const double s4 = norm_sq(z) * norm_sq(z);
    const double f = f_invariant(z);
    if (std::abs(f) <= 10 * kDefaultTol * s4) continue;
    const RegionLabel lab = classify_equal_dim(z);
    if (n == 2) {
      // every generic point of the n = 2 space is in the discontinuity region
      CHECK(is_omega(lab));
      if (f > 0.0) CHECK(lab == RegionLabel::OmegaZero);
      else CHECK((lab == RegionLabel::OmegaPlus || lab == RegionLabel::OmegaMinus));
    } else {
      CHECK(is_omega(lab) == (f > 0.0));
      if (f < 0.0) CHECK(lab == RegionLabel::LambdaInterior);
    }
  }
}

TEST_CASE("label strings") {
  CHECK(std::strcmp(to_string(RegionLabel::Lambda0), "LAMBDA0") == 0);
  CHECK(std::strcmp(to_string(RegionLabel::LambdaRealExterior), "LAMBDA_REAL") == 0);
  CHECK(std::strcmp(to_string(RegionLabel::LambdaParabolic), "LAMBDA_PARA") == 0);
  CHECK(std::strcmp(to_string(RegionLabel::LambdaInterior), "LAMBDA_INT") == 0);
  CHECK(std::strcmp(to_string(RegionLabel::OmegaZero), "OMEGA_0") == 0);
  CHECK(std::strcmp(to_string(RegionLabel::OmegaMinus), "OMEGA_MINUS") == 0);
  CHECK(std::strcmp(to_string(RegionLabel::OmegaPlus), "OMEGA_PLUS") == 0);
  CHECK(std::strcmp(to_string(RegionLabel::OmegaSingle), "OMEGA") == 0);
}
