#include "limitset/batch.hpp"

namespace limitset {

std::vector<RegionLabel> classify_batch(const std::vector<CVec>& pts, int m, double tol,
                                        Exec exec) {
  const long count = static_cast<long>(pts.size());
  std::vector<RegionLabel> out(pts.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) out[i] = classify(pts[i], m, tol);
  } else {
    for (long i = 0; i < count; ++i) out[i] = classify(pts[i], m, tol);
  }
  return out;
}

}  // namespace limitset
