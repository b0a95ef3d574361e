#pragma once

#include "limitset/types.hpp"

namespace limitset {

// Point of complex projective space with a canonical representative: the
// coordinate of largest modulus (lowest index on ties) equals exactly 1.
struct ProjectivePoint {
  CVec rep;
};

ProjectivePoint normalize(const CVec& z);

// Dual hyperplane of a point: w lies on it iff <coeff, w> vanishes.
struct TangentHyperplane {
  CVec coeff;
  bool contains(const CVec& w, double tol = kDefaultTol) const;
};

TangentHyperplane hyperplane_of(const ProjectivePoint& p);

// True when coordinates 1..m and n+1 all vanish within tol*|z|.  These points
// form the kernel of the coordinate projection below.
bool in_lambda0(const CVec& z, int m, double tol = kDefaultTol);

// Drops coordinates m+1..n, keeping (z_1..z_m, z_{n+1}); the result lives in
// C^{m,1} and inherits the indefinite form.
CVec q_project(const CVec& z, int m, double tol = kDefaultTol);

enum class RealIntersectionKind { WholeRealSpace, RealHyperplane, RealCodim2 };

// How the dual hyperplane of z meets the real points of the projected space.
RealIntersectionKind real_intersection_kind(const CVec& z, int m, double tol = kDefaultTol);

}  // namespace limitset
