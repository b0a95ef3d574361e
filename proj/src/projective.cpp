#include "limitset/projective.hpp"

#include "limitset/hermitian.hpp"

#include <cmath>
#include <stdexcept>

namespace limitset {

ProjectivePoint normalize(const CVec& z) {
  size_t imax = 0;
  double best = -1.0;
  for (size_t j = 0; j < z.size(); ++j) {
    const double a = std::abs(z[j]);
    if (a > best) {
      best = a;
      imax = j;
    }
  }
  if (best == 0.0) throw std::invalid_argument("normalize: zero vector");
  ProjectivePoint p;
  p.rep.resize(z.size());
  const cplx pivot = z[imax];
  for (size_t j = 0; j < z.size(); ++j) p.rep[j] = z[j] / pivot;
  p.rep[imax] = cplx{1.0, 0.0};
  return p;
}

bool TangentHyperplane::contains(const CVec& w, double tol) const {
  const double scale = std::sqrt(norm_sq(coeff)) * std::sqrt(norm_sq(w));
  return std::abs(herm_inner(coeff, w)) <= tol * scale;
}

TangentHyperplane hyperplane_of(const ProjectivePoint& p) {
  return TangentHyperplane{p.rep};
}

static void check_m(const CVec& z, int m) {
  const int n = space_dim(z);
  if (m < 2 || m > n) throw std::invalid_argument("subspace dimension m out of range");
}

bool in_lambda0(const CVec& z, int m, double tol) {
  check_m(z, m);
  const double scale = std::sqrt(norm_sq(z));
  if (scale == 0.0) throw std::invalid_argument("in_lambda0: zero vector");
  for (int j = 0; j < m; ++j)
    if (std::abs(z[j]) > tol * scale) return false;
  return std::abs(z.back()) <= tol * scale;
}

CVec q_project(const CVec& z, int m, double tol) {
  check_m(z, m);
  if (in_lambda0(z, m, tol))
    throw std::domain_error("q_project: point lies in the projection kernel");
  CVec q(m + 1);
  for (int j = 0; j < m; ++j) q[j] = z[j];
  q[m] = z.back();
  return q;
}

RealIntersectionKind real_intersection_kind(const CVec& z, int m, double tol) {
  if (in_lambda0(z, m, tol)) return RealIntersectionKind::WholeRealSpace;
  return conj_dependent(q_project(z, m, tol), tol) ? RealIntersectionKind::RealHyperplane
                                                   : RealIntersectionKind::RealCodim2;
}

}  // namespace limitset
