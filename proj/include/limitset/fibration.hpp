#pragma once

#include "limitset/projective.hpp"
#include "limitset/types.hpp"

namespace limitset {

// Principal square root of -<z, conj z>: nonnegative real part, and
// nonnegative imaginary part when the real part vanishes.
cplx eta(const CVec& z);

// The vector z conj(eta) + conj(z) eta.  Real-entried for every z; realizes
// the orthogonal projection onto the real form when z lies in its domain.
CVec midpoint_lift_raw(const CVec& z);

// Same map gated to its geometric domain: f(z) > 0, or z a complex multiple
// of a real negative vector.  Output is a negative vector there.
CVec midpoint_lift(const CVec& z, double tol = kDefaultTol);

// Projection of a discontinuity-region point onto real hyperbolic space.
ProjectivePoint real_projection(const CVec& z, double tol = kDefaultTol);

// Point of the fiber over the base point with polar coordinates t: the image
// under frame_matrix(t) of (i y_1, ..., i y_n, x_last), x_last != 0.
ProjectivePoint fiber_point(const RVec& t, const RVec& y, double x_last);

}  // namespace limitset
