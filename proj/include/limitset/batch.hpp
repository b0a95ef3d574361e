#pragma once

#include "limitset/classify.hpp"
#include "limitset/types.hpp"

namespace limitset {

// Execution policy for the data-parallel kernels.  Serial is the reference
// path; Parallel must produce bit-identical results (pure per-element work,
// merged in index order).
enum class Exec { Serial, Parallel };

std::vector<RegionLabel> classify_batch(const std::vector<CVec>& pts, int m, double tol,
                                        Exec exec);

}  // namespace limitset
