#include "limitset/census.hpp"

#include "limitset/hermitian.hpp"
#include "limitset/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace limitset {

namespace {

struct UnionFind {
  std::vector<int> parent, size;
  explicit UnionFind(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

void validate(const CensusConfig& cfg) {
  if (cfg.m < 2 || cfg.m > cfg.n) throw std::invalid_argument("census: need 2 <= m <= n");
  if (cfg.samples < 100) throw std::invalid_argument("census: need samples >= 100");
  if (cfg.segment_steps < 16) throw std::invalid_argument("census: need segment_steps >= 16");
  if (cfg.edge_candidates < 0) throw std::invalid_argument("census: negative edge budget");
  if (!(cfg.tol > 0.0 && cfg.tol < 1e-2)) throw std::invalid_argument("census: tol out of range");
}

// Label of one chord step; degenerate-determinant throws map to a sentinel.
int step_label(const CVec& z, int m, double tol, int* degenerate) {
  try {
    return static_cast<int>(classify(z, m, tol));
  } catch (const std::domain_error&) {
    ++*degenerate;
    return -1;
  }
}

}  // namespace

std::vector<SamplePoint> sample_points(const CensusConfig& cfg, Exec exec) {
  validate(cfg);
  Rng rng(mix_seed(cfg.seed, 1));
  std::vector<CVec> raw(cfg.samples);
  for (auto& z : raw) z = normalize(rng.gaussian_vec(cfg.n)).rep;
  const std::vector<RegionLabel> labels = classify_batch(raw, cfg.m, cfg.tol, exec);
  std::vector<SamplePoint> out(cfg.samples);
  for (int i = 0; i < cfg.samples; ++i) out[i] = {ProjectivePoint{std::move(raw[i])}, labels[i]};
  return out;
}

CensusReport run_census(const CensusConfig& cfg, Exec exec) {
  CensusReport rep;
  rep.config = cfg;
  const std::vector<SamplePoint> samples = sample_points(cfg, exec);
  for (const SamplePoint& s : samples) ++rep.label_histogram[to_string(s.label)];

  // Graph nodes: Omega samples that are not hugging the f = 0 boundary of
  // their projected image.
  std::vector<int> node_of;
  node_of.reserve(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!is_omega(samples[i].label)) continue;
    const CVec q = q_project(samples[i].point.rep, cfg.m, cfg.tol);
    const double s2 = norm_sq(q);
    if (std::abs(f_invariant(q)) <= 10.0 * cfg.tol * s2 * s2) continue;
    node_of.push_back(static_cast<int>(i));
  }
  const int nodes = static_cast<int>(node_of.size());
  rep.omega_nodes = nodes;

  if (nodes >= 2 && cfg.edge_candidates > 0) {
    // Candidate pairs are drawn within label classes.  Merges across labels
    // are forbidden below regardless, so cross-label candidates would only
    // burn budget and starve small classes of the edges they need.
    std::vector<int> class_of(nodes), rank_in_class(nodes);
    std::vector<std::vector<int>> classes;
    std::map<RegionLabel, int> class_index;
    for (int v = 0; v < nodes; ++v) {
      const RegionLabel lab = samples[node_of[v]].label;
      const auto [it, fresh] = class_index.try_emplace(lab, static_cast<int>(classes.size()));
      if (fresh) classes.emplace_back();
      class_of[v] = it->second;
      rank_in_class[v] = static_cast<int>(classes[it->second].size());
      classes[it->second].push_back(v);
    }

    Rng pair_rng(mix_seed(cfg.seed, 2));
    std::vector<std::pair<int, int>> cand(cfg.edge_candidates);
    for (auto& c : cand) {
      const int i = static_cast<int>(pair_rng.below(nodes));
      const std::vector<int>& cls = classes[class_of[i]];
      if (cls.size() < 2) {
        c = {i, i};  // no partner in this class; the walk below skips it
        continue;
      }
      int j = static_cast<int>(pair_rng.below(cls.size() - 1));
      if (j >= rank_in_class[i]) ++j;
      c = {i, cls[j]};
    }

    const long count = static_cast<long>(cand.size());
    std::vector<unsigned char> pass(cand.size(), 0);
    int degenerate = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : degenerate) if (exec == Exec::Parallel)
    for (long e = 0; e < count; ++e) {
      if (cand[e].first == cand[e].second) {
        pass[e] = 0;
        continue;
      }
      const CVec& p = samples[node_of[cand[e].first]].point.rep;
      const CVec& q = samples[node_of[cand[e].second]].point.rep;
      bool ok = true;
      for (int s = 0; s <= cfg.segment_steps && ok; ++s) {
        const double w = static_cast<double>(s) / cfg.segment_steps;
        CVec c(p.size());
        for (size_t r = 0; r < p.size(); ++r) c[r] = p[r] + w * (q[r] - p[r]);
        const int lab = step_label(c, cfg.m, cfg.tol, &degenerate);
        if (lab < 0 || !is_omega(static_cast<RegionLabel>(lab))) ok = false;
      }
      pass[e] = ok ? 1 : 0;
    }

    rep.degenerate_determinant_count = degenerate;
    UnionFind uf(nodes);
    for (long e = 0; e < count; ++e) {
      if (!pass[e]) continue;
      const RegionLabel li = samples[node_of[cand[e].first]].label;
      const RegionLabel lj = samples[node_of[cand[e].second]].label;
      if (li != lj) {
        ++rep.cross_label_edges;
        continue;
      }
      uf.merge(cand[e].first, cand[e].second);
    }
    for (int v = 0; v < nodes; ++v)
      if (uf.find(v) == v) rep.component_sizes.push_back(uf.size[v]);
  } else {
    rep.component_sizes.assign(nodes, 1);
  }

  std::sort(rep.component_sizes.rbegin(), rep.component_sizes.rend());
  rep.component_count = static_cast<int>(rep.component_sizes.size());
  return rep;
}

bool operator==(const CensusReport& a, const CensusReport& b) {
  return a.omega_nodes == b.omega_nodes && a.component_count == b.component_count &&
         a.component_sizes == b.component_sizes && a.label_histogram == b.label_histogram &&
         a.cross_label_edges == b.cross_label_edges &&
         a.degenerate_determinant_count == b.degenerate_determinant_count;
}

}  // namespace limitset
