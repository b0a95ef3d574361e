#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limitset/census.hpp"
#include "limitset/io.hpp"
#include "limitset/slice.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace limitset;

namespace {

CensusConfig tiny_config(int m, int n) {
  CensusConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.samples = 300;
  cfg.edge_candidates = 1500;
  cfg.segment_steps = 16;
  cfg.seed = 5;
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct FileGuard {
  std::string path;
  ~FileGuard() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("census runs are deterministic and execution-mode independent") {
  const CensusConfig cfg = tiny_config(2, 3);
  const CensusReport a = run_census(cfg, Exec::Parallel);
  const CensusReport b = run_census(cfg, Exec::Parallel);
  const CensusReport c = run_census(cfg, Exec::Serial);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.omega_nodes > 0);
  CHECK(a.cross_label_edges == 0);

  CensusConfig other = cfg;
  other.seed = 6;
  CHECK_FALSE(run_census(other, Exec::Parallel) == a);
}

TEST_CASE("census histograms match the geometry of the dimension pair") {
  // n = 2: the f < 0 side splits by orientation, no single OMEGA label
  const CensusReport r2 = run_census(tiny_config(2, 2), Exec::Parallel);
  CHECK(r2.label_histogram.count("OMEGA") == 0);
  CHECK(r2.label_histogram.count("OMEGA_PLUS") == 1);
  CHECK(r2.label_histogram.count("OMEGA_MINUS") == 1);
  CHECK(r2.label_histogram.count("OMEGA_0") == 1);

  // boundary labels are measure zero: essentially never sampled
  int para = 0;
  auto it = r2.label_histogram.find("LAMBDA_PARA");
  if (it != r2.label_histogram.end()) para = it->second;
  CHECK(para <= r2.config.samples / 100);

  // m = n = 3: no orientation split exists
  const CensusReport r3 = run_census(tiny_config(3, 3), Exec::Parallel);
  CHECK(r3.label_histogram.count("OMEGA_PLUS") == 0);
  CHECK(r3.label_histogram.count("OMEGA_MINUS") == 0);
  CHECK(r3.label_histogram.count("OMEGA") == 1);
  CHECK(r3.cross_label_edges == 0);

  int total = 0;
  for (const auto& kv : r3.label_histogram) total += kv.second;
  CHECK(total == r3.config.samples);
}

TEST_CASE("census rejects malformed configurations") {
  CensusConfig cfg = tiny_config(2, 2);
  cfg.samples = 99;
  CHECK_THROWS_AS(run_census(cfg), std::invalid_argument);
  cfg = tiny_config(2, 2);
  cfg.segment_steps = 15;
  CHECK_THROWS_AS(run_census(cfg), std::invalid_argument);
  cfg = tiny_config(3, 2);
  CHECK_THROWS_AS(run_census(cfg), std::invalid_argument);
  cfg = tiny_config(1, 2);
  CHECK_THROWS_AS(run_census(cfg), std::invalid_argument);
  cfg = tiny_config(2, 2);
  cfg.tol = 0.0;
  CHECK_THROWS_AS(run_census(cfg), std::invalid_argument);
  cfg.tol = 0.5;
  CHECK_THROWS_AS(run_census(cfg), std::invalid_argument);
  cfg = tiny_config(2, 2);
  cfg.edge_candidates = -1;
  CHECK_THROWS_AS(run_census(cfg), std::invalid_argument);
}

TEST_CASE("census report serializes every field") {
  const CensusReport rep = run_census(tiny_config(2, 2), Exec::Parallel);
  const std::string js = census_report_json(rep);
  for (const char* key :
       {"\"config\"", "\"m\"", "\"n\"", "\"samples\"", "\"edge_candidates\"", "\"segment_steps\"",
        "\"seed\"", "\"tol\"", "\"omega_nodes\"", "\"component_count\"", "\"component_sizes\"",
        "\"label_histogram\"", "\"cross_label_edges\"", "\"degenerate_determinant_count\""}) {
    CHECK_MESSAGE(js.find(key) != std::string::npos, key);
  }
}

TEST_CASE("slice of the real plane shows the ball inside the exterior") {
  SliceSpec spec;
  spec.m = 2;
  spec.n = 2;
  spec.center = {cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
  spec.dir_u = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}};
  spec.dir_v = {cplx{0, 0}, cplx{1, 0}, cplx{0, 0}};
  spec.half_width = 2.0;
  spec.res = 33;

  const SliceResult r = render_slice(spec, Exec::Parallel);
  REQUIRE(r.res == 33);
  REQUIRE(static_cast<int>(r.labels.size()) == 33 * 33);

  // exact center pixel is the ball origin
  CHECK(r.label_at(16, 16) == static_cast<int>(RegionLabel::OmegaZero));
  // corners lie far outside the unit circle
  CHECK(r.label_at(0, 0) == static_cast<int>(RegionLabel::LambdaRealExterior));
  CHECK(r.label_at(0, 32) == static_cast<int>(RegionLabel::LambdaRealExterior));
  CHECK(r.label_at(32, 0) == static_cast<int>(RegionLabel::LambdaRealExterior));
  CHECK(r.label_at(32, 32) == static_cast<int>(RegionLabel::LambdaRealExterior));
  // the real plane meets only those two regions
  for (int v : r.labels) {
    CHECK((v == static_cast<int>(RegionLabel::OmegaZero) ||
           v == static_cast<int>(RegionLabel::LambdaRealExterior)));
  }

  const SliceResult rs = render_slice(spec, Exec::Serial);
  CHECK(rs.labels == r.labels);
}

TEST_CASE("slice near an interior point stays in the interior") {
  SliceSpec spec;
  spec.m = 3;
  spec.n = 3;
  spec.center = {cplx{1, 0}, cplx{0, 1}, cplx{0, 0}, cplx{0, 0}};
  spec.dir_u = {cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0, 0}};
  spec.dir_v = {cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
  spec.half_width = 0.05;
  spec.res = 16;

  const SliceResult r = render_slice(spec, Exec::Parallel);
  for (int v : r.labels) CHECK(v == static_cast<int>(RegionLabel::LambdaInterior));
}

TEST_CASE("slice files carry the advertised formats") {
  SliceSpec spec;
  spec.m = 2;
  spec.n = 2;
  spec.center = {cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
  spec.dir_u = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}};
  spec.dir_v = {cplx{0, 1}, cplx{0, 0}, cplx{0, 0}};
  spec.half_width = 1.5;
  spec.res = 8;
  const SliceResult r = render_slice(spec);

  FileGuard ppm{"slice_test_out.ppm"};
  write_slice_ppm(r, ppm.path);
  const std::string img = slurp(ppm.path);
  const std::string header = "P6\n8 8\n255\n";
  REQUIRE(img.size() == header.size() + 3u * 8u * 8u);
  CHECK(img.compare(0, header.size(), header) == 0);

  FileGuard csv{"slice_test_out.csv"};
  write_slice_csv(r, csv.path);
  std::istringstream lines(slurp(csv.path));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK_FALSE(line.empty());
    ++count;
  }
  CHECK(count == 64);
}

TEST_CASE("point JSON round trip") {
  const CVec z = parse_point_json("[[0, 1], [0, 0], [1, 0]]");
  REQUIRE(z.size() == 3);
  CHECK(z[0] == cplx{0, 1});
  CHECK(z[1] == cplx{0, 0});
  CHECK(z[2] == cplx{1, 0});

  // decimal parsing is bit-exact
  const CVec w = parse_point_json("[[0.1, -2.5e-3], [0, 0], [1, 0]]");
  CHECK(w[0].real() == 0.1);
  CHECK(w[0].imag() == -2.5e-3);

  const CVec v = {cplx{0.1, 0.7}, cplx{-3.25, 1e-17}, cplx{0, 0}, cplx{2, -2}};
  CHECK(parse_point_json(point_to_json(v)) == v);

  CHECK_THROWS_AS(parse_point_json("not json"), std::exception);
  CHECK_THROWS_AS(parse_point_json("[[1, 2], [3, 4]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point_json("[[1], [2], [3]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point_json("[[1, \"x\"], [0, 0], [1, 0]]"), std::invalid_argument);
}

TEST_CASE("matrix CSV round trip") {
  const IsometryMatrix a = random_isometry(3, 12345, 5);
  FileGuard csv{"matrix_test_out.csv"};
  write_matrix_csv(a, csv.path);

  const std::string text = slurp(csv.path);
  CHECK(text.rfind("n=3\n", 0) == 0);

  const IsometryMatrix b = read_matrix_csv(csv.path);
  CHECK(b.n == a.n);
  CHECK(b.e == a.e);  // precision 17 round-trips doubles exactly

  CHECK_THROWS_AS(read_matrix_csv("no_such_file_here.csv"), std::runtime_error);
  {
    std::ofstream bad("matrix_bad_header.csv");
    bad << "rows=3\n";
  }
  FileGuard badf{"matrix_bad_header.csv"};
  CHECK_THROWS_AS(read_matrix_csv(badf.path), std::runtime_error);
}
