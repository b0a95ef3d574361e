#include "limitset/hermitian.hpp"

#include <cmath>
#include <stdexcept>

namespace limitset {

double norm_sq(const CVec& z) {
  double s = 0.0;
  for (const cplx& c : z) s += std::norm(c);
  return s;
}

double norm_sq(const RVec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

CVec conj(const CVec& z) {
  CVec w(z.size());
  for (size_t j = 0; j < z.size(); ++j) w[j] = std::conj(z[j]);
  return w;
}

CVec operator+(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

CVec operator-(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

CVec operator*(cplx a, const CVec& z) {
  CVec r(z.size());
  for (size_t j = 0; j < z.size(); ++j) r[j] = a * z[j];
  return r;
}

cplx herm_inner(const CVec& z, const CVec& w) {
  if (z.size() != w.size() || z.size() < 2)
    throw std::invalid_argument("herm_inner: dimension mismatch");
  cplx s{0.0, 0.0};
  const size_t last = z.size() - 1;
  for (size_t j = 0; j < last; ++j) s += z[j] * std::conj(w[j]);
  s -= z[last] * std::conj(w[last]);
  return s;
}

VectorClass classify_vector(const CVec& z, double tol) {
  const double scale = norm_sq(z);
  if (scale == 0.0) throw std::invalid_argument("classify_vector: zero vector");
  const double q = herm_inner(z, z).real();
  if (std::abs(q) <= tol * scale) return VectorClass::Null;
  return q > 0.0 ? VectorClass::Positive : VectorClass::Negative;
}

Gram2 gram2(const CVec& z1, const CVec& z2) {
  Gram2 g;
  g.a11 = herm_inner(z1, z1).real();
  g.a22 = herm_inner(z2, z2).real();
  g.a12 = herm_inner(z1, z2);
  return g;
}

SpanClass span_class_det(const CVec& z1, const CVec& z2, double tol) {
  const double scale = norm_sq(z1) * norm_sq(z2);
  if (scale == 0.0) throw std::invalid_argument("span_class_det: zero vector");
  const double d = gram2(z1, z2).det();
  if (std::abs(d) <= tol * scale) return SpanClass::Parabolic;
  return d > 0.0 ? SpanClass::Elliptic : SpanClass::Hyperbolic;
}

void gram2_eigenvalues(const Gram2& g, double* lam1, double* lam2) {
  const double s = g.a11 + g.a22;
  const double disc = std::sqrt((g.a11 - g.a22) * (g.a11 - g.a22) + 4.0 * std::norm(g.a12));
  *lam1 = 0.5 * (s + disc);
  *lam2 = 0.5 * (s - disc);
}

SpanClass span_class_eig(const CVec& z1, const CVec& z2, double tol) {
  const double scale = norm_sq(z1) * norm_sq(z2);
  if (scale == 0.0) throw std::invalid_argument("span_class_eig: zero vector");
  double lam1, lam2;
  gram2_eigenvalues(gram2(z1, z2), &lam1, &lam2);
  if (std::abs(lam1 * lam2) <= tol * scale) return SpanClass::Parabolic;
  if (lam2 > 0.0) return SpanClass::Elliptic;
  return SpanClass::Hyperbolic;
}

double f_invariant(const CVec& z) {
  const double q = herm_inner(z, z).real();
  const cplx p = herm_inner(z, conj(z));
  return std::norm(p) - q * q;
}

double f_invariant_coord(const CVec& z) {
  const size_t n = z.size() - 1;
  double s = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double m = z[j].real() * z[n].imag() - z[n].real() * z[j].imag();
    s += 4.0 * m * m;
  }
  for (size_t j = 0; j + 1 < n; ++j)
    for (size_t k = j + 1; k < n; ++k) {
      const double m = z[j].real() * z[k].imag() - z[k].real() * z[j].imag();
      s -= 4.0 * m * m;
    }
  return s;
}

bool conj_dependent(const CVec& z, double tol) {
  const double scale = norm_sq(z);
  for (size_t j = 0; j + 1 < z.size(); ++j)
    for (size_t k = j + 1; k < z.size(); ++k) {
      // z_j conj(z_k) - z_k conj(z_j) = 2i Im(z_j conj(z_k))
      const double m = 2.0 * std::imag(z[j] * std::conj(z[k]));
      if (std::abs(m) > tol * scale) return false;
    }
  return true;
}

}  // namespace limitset
