#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limitset/hermitian.hpp"
#include "limitset/rng.hpp"

#include <cmath>

using namespace limitset;

namespace {

CVec unit(int n, int j) {
  CVec z(n + 1, cplx{0.0, 0.0});
  z[j] = cplx{1.0, 0.0};
  return z;
}

}  // namespace

TEST_CASE("indefinite product has signature (n,1)") {
  for (int n : {2, 3, 5}) {
    for (int j = 0; j < n; ++j) CHECK(herm_inner(unit(n, j), unit(n, j)) == cplx{1.0, 0.0});
    CHECK(herm_inner(unit(n, n), unit(n, n)) == cplx{-1.0, 0.0});
    CHECK(herm_inner(unit(n, 0), unit(n, n)) == cplx{0.0, 0.0});
  }
  CHECK_THROWS_AS(herm_inner(unit(2, 0), unit(3, 0)), std::invalid_argument);
}

TEST_CASE("conjugate symmetry and sesquilinearity") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 3;
    const CVec z = rng.gaussian_vec(n), w = rng.gaussian_vec(n);
    const cplx a = rng.cgaussian();
    CHECK(std::abs(herm_inner(w, z) - std::conj(herm_inner(z, w))) < 1e-12);
    CHECK(std::abs(herm_inner(a * z, w) - a * herm_inner(z, w)) < 1e-10);
    CHECK(std::abs(herm_inner(z, a * w) - std::conj(a) * herm_inner(z, w)) < 1e-10);
  }
}

TEST_CASE("vector classification") {
  CHECK(classify_vector(unit(3, 3)) == VectorClass::Negative);
  CHECK(classify_vector(unit(3, 0)) == VectorClass::Positive);
  CVec null = unit(3, 0);
  null[3] = cplx{1.0, 0.0};
  CHECK(classify_vector(null) == VectorClass::Null);
  CHECK_THROWS_AS(classify_vector(CVec(4, cplx{0.0, 0.0})), std::invalid_argument);
}

TEST_CASE("gram matrix of a null/positive pair") {
  for (int n : {2, 4}) {
    CVec z1 = unit(n, 0);
    z1[n] = cplx{1.0, 0.0};
    const CVec z2 = unit(n, 1);
    const Gram2 g = gram2(z1, z2);
    CHECK(g.a11 == 0.0);
    CHECK(g.a22 == 1.0);
    CHECK(g.a12 == cplx{0.0, 0.0});
    CHECK(g.det() == 0.0);
    CHECK(span_class_det(z1, z2) == SpanClass::Parabolic);
    CHECK(span_class_eig(z1, z2) == SpanClass::Parabolic);
  }
}

TEST_CASE("span classes of coordinate pairs") {
  for (int n : {2, 3}) {
    CHECK(span_class_det(unit(n, 0), unit(n, n)) == SpanClass::Hyperbolic);
    CHECK(span_class_eig(unit(n, 0), unit(n, n)) == SpanClass::Hyperbolic);
    CHECK(span_class_det(unit(n, 0), unit(n, 1)) == SpanClass::Elliptic);
    CHECK(span_class_eig(unit(n, 0), unit(n, 1)) == SpanClass::Elliptic);
    double l1, l2;
    gram2_eigenvalues(gram2(unit(n, 0), unit(n, n)), &l1, &l2);
    CHECK(l1 == doctest::Approx(1.0));
    CHECK(l2 == doctest::Approx(-1.0));
  }
}

TEST_CASE("determinant and eigenvalue routes agree on random pairs") {
  Rng rng(23);
  int compared = 0;
  for (int t = 0; t < 3000; ++t) {
    const int n = (t % 3 == 0) ? 2 : (t % 3 == 1) ? 3 : 5;
    const CVec z1 = rng.gaussian_vec(n), z2 = rng.gaussian_vec(n);
    const double scale = norm_sq(z1) * norm_sq(z2);
    const Gram2 g = gram2(z1, z2);
    double l1, l2;
    gram2_eigenvalues(g, &l1, &l2);
    CHECK(std::abs(l1 * l2 - g.det()) <= 1e-10 * std::max(scale, std::abs(g.det())));
    if (std::abs(g.det()) <= kDefaultTol * scale) continue;
    ++compared;
    CHECK(span_class_det(z1, z2) == span_class_eig(z1, z2));
  }
  CHECK(compared > 2500);
}

TEST_CASE("f on the reference points") {
  // (i, 0, ..., 0, 1): conjugate span hyperbolic
  for (int n : {2, 3, 5}) {
    CVec z(n + 1, cplx{0.0, 0.0});
    z[0] = cplx{0.0, 1.0};
    z[n] = cplx{1.0, 0.0};
    CHECK(f_invariant(z) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(f_invariant_coord(z) == doctest::Approx(4.0).epsilon(1e-12));
  }
  // (1, i, 0, ..., 0): conjugate span elliptic
  for (int n : {2, 3, 5}) {
    CVec z(n + 1, cplx{0.0, 0.0});
    z[0] = cplx{1.0, 0.0};
    z[1] = cplx{0.0, 1.0};
    CHECK(f_invariant(z) == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(f_invariant_coord(z) == doctest::Approx(-4.0).epsilon(1e-12));
  }
  // real vectors sit on the zero set
  CHECK(f_invariant(unit(3, 0)) == 0.0);
}

TEST_CASE("f: route agreement, homogeneity") {
  Rng rng(37);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n);
    const double s4 = norm_sq(z) * norm_sq(z);
    CHECK(std::abs(f_invariant(z) - f_invariant_coord(z)) <= 1e-10 * s4);
    cplx a = rng.cgaussian();
    if (std::abs(a) < 0.1) a += cplx{1.0, 0.0};
    const double a4 = std::pow(std::abs(a), 4.0);
    CHECK(std::abs(f_invariant(a * z) - a4 * f_invariant(z)) <= 1e-10 * a4 * s4);
  }
}

TEST_CASE("conjugate dependence detection") {
  Rng rng(41);
  CHECK(conj_dependent({cplx{1, 0}, cplx{2, 0}, cplx{-0.5, 0}}));
  CHECK_FALSE(conj_dependent({cplx{1, 0}, cplx{0, 1}, cplx{0, 0}}));
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 3;
    const double phi = rng.uniform(0.0, 6.283185);
    const cplx phase{std::cos(phi), std::sin(phi)};
    CVec z(n + 1);
    for (auto& v : z) v = phase * rng.gaussian();
    CHECK(conj_dependent(z));
    CHECK(std::abs(f_invariant(z)) <= 1e-10 * norm_sq(z) * norm_sq(z));
  }
}
