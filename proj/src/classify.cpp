#include "limitset/classify.hpp"

#include "limitset/hermitian.hpp"
#include "limitset/projective.hpp"

#include <cmath>
#include <stdexcept>

namespace limitset {

const char* to_string(RegionLabel l) {
  switch (l) {
    case RegionLabel::Lambda0: return "LAMBDA0";
    case RegionLabel::LambdaRealExterior: return "LAMBDA_REAL";
    case RegionLabel::LambdaParabolic: return "LAMBDA_PARA";
    case RegionLabel::LambdaInterior: return "LAMBDA_INT";
    case RegionLabel::OmegaZero: return "OMEGA_0";
    case RegionLabel::OmegaMinus: return "OMEGA_MINUS";
    case RegionLabel::OmegaPlus: return "OMEGA_PLUS";
    case RegionLabel::OmegaSingle: return "OMEGA";
  }
  return "?";
}

bool is_omega(RegionLabel l) {
  return l == RegionLabel::OmegaZero || l == RegionLabel::OmegaMinus ||
         l == RegionLabel::OmegaPlus || l == RegionLabel::OmegaSingle;
}

bool is_lambda(RegionLabel l) { return !is_omega(l); }

PartitionLabel partition_label(const CVec& z, double tol) {
  const double s2 = norm_sq(z);
  if (s2 == 0.0) throw std::invalid_argument("partition_label: zero vector");
  const double f = f_invariant(z);
  if (std::abs(f) <= tol * s2 * s2) return PartitionLabel::UZero;
  return f > 0.0 ? PartitionLabel::UPlus : PartitionLabel::UMinus;
}

RegionLabel classify_equal_dim(const CVec& z, double tol) {
  const int n = space_dim(z);
  if (n < 2) throw std::invalid_argument("classify_equal_dim: need n >= 2");
  const double s2 = norm_sq(z);
  if (s2 == 0.0) throw std::invalid_argument("classify_equal_dim: zero vector");

  if (conj_dependent(z, tol)) {
    const double q = herm_inner(z, z).real();
    if (q >= -tol * s2) return RegionLabel::LambdaRealExterior;
    return n == 2 ? RegionLabel::OmegaZero : RegionLabel::OmegaSingle;
  }

  const double f = f_invariant(z);
  if (std::abs(f) <= tol * s2 * s2) return RegionLabel::LambdaParabolic;
  if (n > 2) return f < 0.0 ? RegionLabel::LambdaInterior : RegionLabel::OmegaSingle;
  return f > 0.0 ? RegionLabel::OmegaZero : omega2_component(z, tol);
}

RegionLabel omega2_component(const CVec& p, double tol) {
  if (p.size() != 3) throw std::invalid_argument("omega2_component: need a C^{2,1} vector");
  const double s2 = norm_sq(p);
  if (s2 == 0.0) throw std::invalid_argument("omega2_component: zero vector");

  if (conj_dependent(p, tol)) {
    if (herm_inner(p, p).real() < -tol * s2) return RegionLabel::OmegaZero;
    throw std::invalid_argument("omega2_component: not a discontinuity-region point");
  }
  const double f = f_invariant(p);
  if (f > tol * s2 * s2) return RegionLabel::OmegaZero;
  if (f < -tol * s2 * s2) {
    const double d = p[0].real() * p[1].imag() - p[1].real() * p[0].imag();
    if (d > tol * s2) return RegionLabel::OmegaPlus;
    if (d < -tol * s2) return RegionLabel::OmegaMinus;
    throw std::domain_error("omega2_component: degenerate determinant");
  }
  throw std::invalid_argument("omega2_component: not a discontinuity-region point");
}

RegionLabel classify(const CVec& z, int m, double tol) {
  if (in_lambda0(z, m, tol)) return RegionLabel::Lambda0;
  return classify_equal_dim(q_project(z, m, tol), tol);
}

}  // namespace limitset
