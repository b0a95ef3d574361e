#pragma once

#include "limitset/batch.hpp"
#include "limitset/classify.hpp"
#include "limitset/projective.hpp"
#include "limitset/types.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace limitset {

struct CensusConfig {
  int m = 2;
  int n = 2;
  int samples = 2000;
  int edge_candidates = 20000;
  int segment_steps = 64;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
};

struct CensusReport {
  CensusConfig config;
  int omega_nodes = 0;
  int component_count = 0;
  std::vector<int> component_sizes;  // descending
  std::map<std::string, int> label_histogram;
  int cross_label_edges = 0;
  int degenerate_determinant_count = 0;
};

struct SamplePoint {
  ProjectivePoint point;
  RegionLabel label;
};

// Gaussian projective samples with their region labels.
std::vector<SamplePoint> sample_points(const CensusConfig& cfg, Exec exec = Exec::Parallel);

// Monte Carlo component census of the discontinuity region: samples are
// graph nodes, candidate pairs are drawn within each label class, and an
// edge joins a pair when every point of the chord between their canonical
// representatives is Omega-labeled.  Pairs whose endpoint labels differ are
// never merged; any such edge would be counted in cross_label_edges.
CensusReport run_census(const CensusConfig& cfg, Exec exec = Exec::Parallel);

bool operator==(const CensusReport& a, const CensusReport& b);

}  // namespace limitset
