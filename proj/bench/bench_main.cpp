#include "limitset/batch.hpp"
#include "limitset/census.hpp"
#include "limitset/rng.hpp"
#include "limitset/slice.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace limitset;
using clk = std::chrono::steady_clock;

static double seconds(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
static double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clk::now();
    fn();
    const auto t1 = clk::now();
    best = std::min(best, seconds(t0, t1));
  }
  return best;
}

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif

  // batch classification
  {
    Rng rng(7);
    std::vector<CVec> pts(200000);
    for (auto& z : pts) z = rng.gaussian_vec(4);
    volatile int sink = 0;
    const double ts = time_best_of(3, [&] {
      auto lab = classify_batch(pts, 2, kDefaultTol, Exec::Serial);
      sink = static_cast<int>(lab.size());
    });
    const double tp = time_best_of(3, [&] {
      auto lab = classify_batch(pts, 2, kDefaultTol, Exec::Parallel);
      sink = static_cast<int>(lab.size());
    });
    (void)sink;
    std::printf("classify_batch  200k pts n=4   serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                ts, tp, ts / tp);
  }

  // census
  {
    CensusConfig cfg;
    cfg.m = 2;
    cfg.n = 2;
    cfg.samples = 1000;
    cfg.edge_candidates = 8000;
    cfg.segment_steps = 64;
    const double ts = time_best_of(2, [&] { run_census(cfg, Exec::Serial); });
    const double tp = time_best_of(2, [&] { run_census(cfg, Exec::Parallel); });
    std::printf("census (2,2)    1k/8k/64       serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                ts, tp, ts / tp);
  }

  // slice raster
  {
    SliceSpec spec;
    spec.m = 2;
    spec.n = 2;
    spec.center = {cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
    spec.dir_u = {cplx{1, 0}, cplx{0, 0.4}, cplx{0, 0}};
    spec.dir_v = {cplx{0, 0.3}, cplx{1, 0}, cplx{0, 0}};
    spec.half_width = 2.0;
    spec.res = 512;
    const double ts = time_best_of(2, [&] { render_slice(spec, Exec::Serial); });
    const double tp = time_best_of(2, [&] { render_slice(spec, Exec::Parallel); });
    std::printf("render_slice    512x512 m=n=2  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                ts, tp, ts / tp);
  }
  return 0;
}
