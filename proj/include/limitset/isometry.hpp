#pragma once

#include "limitset/types.hpp"

#include <cstdint>

namespace limitset {

// Real (n+1)x(n+1) matrix preserving the indefinite form: A^T J A = J with
// J = diag(1,...,1,-1).  Row-major storage.
struct IsometryMatrix {
  int n = 0;  // spatial dimension; the matrix is (n+1)x(n+1)
  RVec e;

  double at(int i, int j) const { return e[i * (n + 1) + j]; }
  double& at(int i, int j) { return e[i * (n + 1) + j]; }
};

IsometryMatrix identity_isometry(int n);
IsometryMatrix mat_mul(const IsometryMatrix& a, const IsometryMatrix& b);
CVec apply_isometry(const IsometryMatrix& a, const CVec& z);
RVec apply_isometry(const IsometryMatrix& a, const RVec& x);

// max |(A^T J A - J)_{ij}|; zero exactly when A preserves the form.
double j_residual(const IsometryMatrix& a);

double det(const IsometryMatrix& a);

// Rotation by an orthogonal spatial block (last row/column untouched).
IsometryMatrix make_rotation(int n, const RVec& block /* n*n row-major */);

// Hyperbolic boost of parameter s in the plane of spatial axis j and the
// timelike axis.
IsometryMatrix make_boost(int n, int j, double s);

// Polar coordinates t = (t_1..t_n): t_1 the radial parameter, t_2..t_n
// angles.  Returns the isometry whose last column carries the ball origin to
// the point with those coordinates.  At t = 0 the spatial block is a
// coordinate permutation, not the identity.
IsometryMatrix frame_matrix(const RVec& t);

// The point [tanh(t_1) u(t) : 1] the frame carries the origin to.
CVec base_point(const RVec& t);

// Columns of frame_matrix with the first and last rescaled by 1/cosh(t_1).
std::vector<RVec> adapted_basis(const RVec& t);

// Block embedding of an isometry of C^{m,1} into C^{n,1}: spatial block and
// mixed entries keep their slots, coordinates m+1..n are fixed.
IsometryMatrix embed_isometry(const IsometryMatrix& g, int n);

// Deterministic product of k alternating random rotations and boosts
// (boost parameters in [-2, 2]); det +1 and time orientation preserved.
IsometryMatrix random_isometry(int m, std::uint64_t seed, int k);

}  // namespace limitset
