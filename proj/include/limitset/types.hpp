#pragma once

#include <complex>
#include <vector>

namespace limitset {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;   // point of C^{n,1}, stored as n+1 coordinates
using RVec = std::vector<double>;

// Default width for every relative zero test.  A quantity q of degree d in the
// coordinates is treated as zero when |q| <= tol * scale, scale being the
// product of squared Euclidean norms matching that degree.
inline constexpr double kDefaultTol = 1e-9;

// Spatial dimension n of the vector; the stored length is n+1.
inline int space_dim(const CVec& z) { return static_cast<int>(z.size()) - 1; }

double norm_sq(const CVec& z);           // Euclidean sum of |z_j|^2
double norm_sq(const RVec& x);
CVec conj(const CVec& z);

CVec operator+(const CVec& a, const CVec& b);
CVec operator-(const CVec& a, const CVec& b);
CVec operator*(cplx a, const CVec& z);

}  // namespace limitset
