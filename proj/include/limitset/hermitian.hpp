#pragma once

#include "limitset/types.hpp"

namespace limitset {

enum class VectorClass { Negative, Null, Positive };

// 2x2 Gram matrix of a vector pair under the indefinite form.  Hermitian by
// construction: real diagonal, off-diagonal entries conjugate.
struct Gram2 {
  double a11 = 0.0;
  double a22 = 0.0;
  cplx a12{0.0, 0.0};
  double det() const { return a11 * a22 - std::norm(a12); }
};

enum class SpanClass { Elliptic, Hyperbolic, Parabolic, DependentPair };

// Indefinite Hermitian product of signature (n,1):
//   <z,w> = sum_{j<=n} z_j conj(w_j) - z_{n+1} conj(w_{n+1}).
cplx herm_inner(const CVec& z, const CVec& w);

// Sign of <z,z> with a relative null band of width tol*|z|^2.
VectorClass classify_vector(const CVec& z, double tol = kDefaultTol);

Gram2 gram2(const CVec& z1, const CVec& z2);

// Span type of two independent vectors from the sign of det Gram2:
// positive -> Elliptic, negative -> Hyperbolic, zero band -> Parabolic.
SpanClass span_class_det(const CVec& z1, const CVec& z2, double tol = kDefaultTol);

// Same trichotomy from the closed-form Gram eigenvalues; kept as an
// independent numerical route and cross-checked against span_class_det.
SpanClass span_class_eig(const CVec& z1, const CVec& z2, double tol = kDefaultTol);

// Eigenvalues of the 2x2 Gram matrix, larger first.
void gram2_eigenvalues(const Gram2& g, double* lam1, double* lam2);

// Degree-4 invariant separating the span types of (z, conj z):
//   f(z) = |<z, conj z>|^2 - <z,z>^2.
// Negative on elliptic conjugate spans, positive on hyperbolic ones.
double f_invariant(const CVec& z);

// Same invariant as a signed sum over coordinate 2x2 minors; retained as a
// debug oracle for f_invariant.
double f_invariant_coord(const CVec& z);

// True when z is a complex multiple of a real vector, i.e. all minors
// z_j conj(z_k) - z_k conj(z_j) vanish within tol*|z|^2.
bool conj_dependent(const CVec& z, double tol = kDefaultTol);

}  // namespace limitset
