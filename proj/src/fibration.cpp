#include "limitset/fibration.hpp"

#include "limitset/hermitian.hpp"
#include "limitset/isometry.hpp"

#include <cmath>
#include <stdexcept>

namespace limitset {

cplx eta(const CVec& z) {
  const cplx w = -herm_inner(z, conj(z));
  cplx r = std::sqrt(w);
  if (r.real() < 0.0) r = -r;
  if (r.real() <= 1e-14 * std::abs(r) && r.imag() < 0.0) r = -r;
  return r;
}

CVec midpoint_lift_raw(const CVec& z) {
  const cplx e = eta(z);
  CVec w(z.size());
  for (size_t j = 0; j < z.size(); ++j) w[j] = z[j] * std::conj(e) + std::conj(z[j]) * e;
  return w;
}

CVec midpoint_lift(const CVec& z, double tol) {
  const double s2 = norm_sq(z);
  if (s2 == 0.0) throw std::invalid_argument("midpoint_lift: zero vector");
  const bool real_negative =
      conj_dependent(z, tol) && herm_inner(z, z).real() < -tol * s2;
  if (!real_negative && f_invariant(z) <= tol * s2 * s2)
    throw std::domain_error("midpoint_lift: point outside the projection domain");
  return midpoint_lift_raw(z);
}

ProjectivePoint real_projection(const CVec& z, double tol) {
  return normalize(midpoint_lift(z, tol));
}

ProjectivePoint fiber_point(const RVec& t, const RVec& y, double x_last) {
  if (y.size() != t.size()) throw std::invalid_argument("fiber_point: y must have n entries");
  if (x_last == 0.0)
    throw std::domain_error("fiber_point: x_last = 0 lies on the boundary sphere, not in a fiber");
  const int n = static_cast<int>(t.size());
  CVec v(n + 1);
  for (int j = 0; j < n; ++j) v[j] = cplx{0.0, y[j]};
  v[n] = cplx{x_last, 0.0};
  return normalize(apply_isometry(frame_matrix(t), v));
}

}  // namespace limitset
