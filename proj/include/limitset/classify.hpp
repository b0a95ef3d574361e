#pragma once

#include "limitset/types.hpp"

#include <string>

namespace limitset {

// Partition of projective space by the sign of f; U0 is the zero band.
enum class PartitionLabel { UMinus, UZero, UPlus };

enum class RegionLabel {
  Lambda0,             // projection kernel, part of the limit set
  LambdaRealExterior,  // real point with <z,z> >= 0
  LambdaParabolic,     // f = 0, conjugate-independent
  LambdaInterior,      // f < 0, conjugate-independent (only for n > 2)
  OmegaZero,           // discontinuity region, zero-index component
  OmegaMinus,          // n = 2 only
  OmegaPlus,           // n = 2 only
  OmegaSingle          // the single component for n > 2
};

const char* to_string(RegionLabel l);
bool is_omega(RegionLabel l);
bool is_lambda(RegionLabel l);

PartitionLabel partition_label(const CVec& z, double tol = kDefaultTol);

// Region of a point relative to the full real form (m = n case).
RegionLabel classify_equal_dim(const CVec& z, double tol = kDefaultTol);

// For n = 2 and f(p) < 0 the discontinuity region splits into two components
// distinguished by the sign of d = Re(p_1) Im(p_2) - Re(p_2) Im(p_1).
RegionLabel omega2_component(const CVec& p, double tol = kDefaultTol);

// Region of [z] in P(C^{n,1}) relative to the embedded m-dimensional real
// form: points of the projection kernel form Lambda0, everything else
// inherits the label of its projection to C^{m,1}.
RegionLabel classify(const CVec& z, int m, double tol = kDefaultTol);

}  // namespace limitset
