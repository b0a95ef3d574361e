#include "limitset/slice.hpp"

#include "limitset/hermitian.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace limitset {

namespace {

struct Rgb {
  unsigned char r, g, b;
};

Rgb palette(int label) {
  if (label < 0) return {128, 128, 128};
  switch (static_cast<RegionLabel>(label)) {
    case RegionLabel::Lambda0: return {0, 0, 0};
    case RegionLabel::LambdaRealExterior: return {139, 0, 0};
    case RegionLabel::LambdaParabolic: return {255, 0, 0};
    case RegionLabel::LambdaInterior: return {255, 165, 0};
    case RegionLabel::OmegaZero: return {255, 255, 255};
    case RegionLabel::OmegaMinus: return {0, 0, 255};
    case RegionLabel::OmegaPlus: return {0, 255, 0};
    case RegionLabel::OmegaSingle: return {255, 255, 255};
  }
  return {128, 128, 128};
}

}  // namespace

SliceResult render_slice(const SliceSpec& spec, Exec exec) {
  if (spec.res < 1) throw std::invalid_argument("render_slice: res must be positive");
  if (!(spec.half_width > 0.0)) throw std::invalid_argument("render_slice: half_width must be positive");
  const size_t d = spec.center.size();
  if (d != spec.dir_u.size() || d != spec.dir_v.size() || static_cast<int>(d) != spec.n + 1)
    throw std::invalid_argument("render_slice: center/dir dimension mismatch");

  const double ref =
      std::sqrt(norm_sq(spec.center)) +
      spec.half_width * (std::sqrt(norm_sq(spec.dir_u)) + std::sqrt(norm_sq(spec.dir_v)));

  SliceResult out;
  out.res = spec.res;
  out.labels.assign(static_cast<size_t>(spec.res) * spec.res, -1);
  const long total = static_cast<long>(spec.res) * spec.res;

#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
  for (long pix = 0; pix < total; ++pix) {
    const int row = static_cast<int>(pix / spec.res);
    const int col = static_cast<int>(pix % spec.res);
    const double a = -spec.half_width + 2.0 * spec.half_width * (col + 0.5) / spec.res;
    const double b = spec.half_width - 2.0 * spec.half_width * (row + 0.5) / spec.res;
    CVec z(d);
    for (size_t j = 0; j < d; ++j) z[j] = spec.center[j] + a * spec.dir_u[j] + b * spec.dir_v[j];
    if (std::sqrt(norm_sq(z)) <= 1e-12 * ref) continue;  // cancellation hole, leave skipped
    try {
      out.labels[pix] = static_cast<int>(classify(z, spec.m, spec.tol));
    } catch (const std::domain_error&) {
      // degenerate-determinant pixel; leave skipped
    }
  }
  return out;
}

void write_slice_ppm(const SliceResult& r, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_slice_ppm: cannot open " + path);
  f << "P6\n" << r.res << " " << r.res << "\n255\n";
  for (int label : r.labels) {
    const Rgb c = palette(label);
    f.put(static_cast<char>(c.r));
    f.put(static_cast<char>(c.g));
    f.put(static_cast<char>(c.b));
  }
}

void write_slice_csv(const SliceResult& r, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_slice_csv: cannot open " + path);
  for (int label : r.labels)
    f << (label < 0 ? "SKIP" : to_string(static_cast<RegionLabel>(label))) << "\n";
}

}  // namespace limitset
