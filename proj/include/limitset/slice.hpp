#pragma once

#include "limitset/batch.hpp"
#include "limitset/classify.hpp"
#include "limitset/types.hpp"

#include <string>

namespace limitset {

// Planar raster through projective space: pixel (row, col) classifies
// center + a*dir_u + b*dir_v with a, b on a centered grid of the given
// half-width (row 0 carries b = +half_width edge, image y pointing down).
struct SliceSpec {
  int m = 2;
  int n = 2;
  CVec center;
  CVec dir_u;
  CVec dir_v;
  double half_width = 1.0;
  int res = 256;
  double tol = kDefaultTol;
};

struct SliceResult {
  int res = 0;
  std::vector<int> labels;  // row-major; RegionLabel values, -1 for skipped pixels
  int label_at(int row, int col) const { return labels[row * res + col]; }
};

SliceResult render_slice(const SliceSpec& spec, Exec exec = Exec::Parallel);

// Binary P6 image using the fixed region palette.
void write_slice_ppm(const SliceResult& r, const std::string& path);

// One label string per line, row-major, res*res lines, no header.
void write_slice_csv(const SliceResult& r, const std::string& path);

}  // namespace limitset
