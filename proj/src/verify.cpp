#include "limitset/verify.hpp"

#include "limitset/batch.hpp"
#include "limitset/census.hpp"
#include "limitset/classify.hpp"
#include "limitset/fibration.hpp"
#include "limitset/hermitian.hpp"
#include "limitset/io.hpp"
#include "limitset/isometry.hpp"
#include "limitset/projective.hpp"
#include "limitset/slice.hpp"

#include "json.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace limitset {

CVec random_f_positive(Rng& rng, int n, double tol) {
  while (true) {
    CVec z = rng.gaussian_vec(n);
    const double s2 = norm_sq(z);
    if (f_invariant(z) > tol * s2 * s2) return z;
  }
}

CVec make_parabolic_positive(Rng& rng, int n) {
  while (true) {
    RVec u(n), w(n);
    for (auto& v : u) v = rng.gaussian();
    for (auto& v : w) v = rng.gaussian();
    const double un = std::sqrt(norm_sq(u));
    if (un < 1e-3) continue;
    double cross = 0.0, ws = 0.0;
    for (int j = 0; j < n; ++j) {
      cross += w[j] * u[j];
      ws += w[j] * w[j];
    }
    const double x_last = cross / un;  // makes <x, y> = 0 for y = (u, |u|)
    const double xx = ws - x_last * x_last;
    if (xx < 0.05 * (ws + x_last * x_last)) continue;  // need a solidly positive x
    CVec z(n + 1);
    for (int j = 0; j < n; ++j) z[j] = cplx{w[j], u[j]};
    z[n] = cplx{x_last, un};
    if (conj_dependent(z)) continue;
    return z;
  }
}

CVec uniform_ball(Rng& rng, const CVec& center, double radius) {
  const int dim = 2 * static_cast<int>(center.size());
  RVec g(dim);
  double nn = 0.0;
  do {
    for (auto& v : g) v = rng.gaussian();
    nn = std::sqrt(norm_sq(g));
  } while (nn < 1e-12);
  const double r = radius * std::pow(rng.uniform01(), 1.0 / dim) / nn;
  CVec z = center;
  for (size_t j = 0; j < z.size(); ++j) z[j] += cplx{r * g[2 * j], r * g[2 * j + 1]};
  return z;
}

namespace {

struct Checker {
  int failures = 0;
  double max_residual = 0.0;
  void check(bool ok, double residual = 0.0) {
    if (!ok) ++failures;
    if (residual > max_residual) max_residual = residual;
  }
};

PropertyResult finish(const std::string& name, int trials, const Checker& c,
                      const std::string& note = "") {
  return PropertyResult{name, trials, c.failures, c.max_residual, c.failures == 0, note};
}

double cnorm(const CVec& z) { return std::sqrt(norm_sq(z)); }

// ----- hermitian core -----

PropertyResult prop_conjugate_symmetry(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 101));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n), w = rng.gaussian_vec(n);
    const double res = std::abs(herm_inner(w, z) - std::conj(herm_inner(z, w)));
    const double rel = res / (cnorm(z) * cnorm(w));
    c.check(rel <= 1e-13, rel);
  }
  return finish("herm-conjugate-symmetry", trials, c);
}

PropertyResult prop_sesquilinear(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 102));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n), u = rng.gaussian_vec(n), w = rng.gaussian_vec(n);
    const cplx a = rng.cgaussian(), b = rng.cgaussian();
    const cplx lhs = herm_inner(a * z + b * u, w);
    const cplx rhs = a * herm_inner(z, w) + b * herm_inner(u, w);
    const cplx lhs2 = herm_inner(z, a * w);
    const cplx rhs2 = std::conj(a) * herm_inner(z, w);
    const double scale = (std::abs(a) * cnorm(z) + std::abs(b) * cnorm(u)) * cnorm(w) +
                         std::abs(a) * cnorm(z) * cnorm(w);
    const double rel = (std::abs(lhs - rhs) + std::abs(lhs2 - rhs2)) / scale;
    c.check(rel <= 1e-12, rel);
  }
  return finish("herm-sesquilinearity", trials, c);
}

PropertyResult prop_span_oracle(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 103));
  Checker c;
  int compared = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = (t % 3 == 0) ? 2 : (t % 3 == 1) ? 3 : 5;
    const CVec z1 = rng.gaussian_vec(n), z2 = rng.gaussian_vec(n);
    const double scale = norm_sq(z1) * norm_sq(z2);
    const Gram2 g = gram2(z1, z2);
    if (std::abs(g.det()) <= tol * scale) continue;
    ++compared;
    c.check(span_class_det(z1, z2, tol) == span_class_eig(z1, z2, tol));
  }
  std::ostringstream note;
  note << compared << " pairs outside the parabolic band";
  return finish("span-oracle-agreement", trials, c, note.str());
}

PropertyResult prop_eig_product(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 104));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z1 = rng.gaussian_vec(n), z2 = rng.gaussian_vec(n);
    const Gram2 g = gram2(z1, z2);
    double l1, l2;
    gram2_eigenvalues(g, &l1, &l2);
    const double scale = std::max(norm_sq(z1) * norm_sq(z2), std::abs(g.det()));
    const double rel = std::abs(l1 * l2 - g.det()) / scale;
    c.check(rel <= 1e-10, rel);
  }
  return finish("gram-eigenvalue-product", trials, c);
}

PropertyResult prop_f_two_routes(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 105));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n);
    const double s4 = norm_sq(z) * norm_sq(z);
    const double rel = std::abs(f_invariant(z) - f_invariant_coord(z)) / s4;
    c.check(rel <= 1e-10, rel);
  }
  return finish("f-two-routes", trials, c);
}

PropertyResult prop_f_homogeneity(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 106));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n);
    cplx a = rng.cgaussian();
    if (std::abs(a) < 0.1) a += cplx{0.5, 0.5};
    const double a4 = std::pow(std::abs(a), 4.0);
    const double s4 = norm_sq(z) * norm_sq(z);
    const double rel = std::abs(f_invariant(a * z) - a4 * f_invariant(z)) / (a4 * s4);
    c.check(rel <= 1e-10, rel);
  }
  return finish("f-homogeneity", trials, c);
}

PropertyResult prop_f_span_correspondence(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 107));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n);
    const double s4 = norm_sq(z) * norm_sq(z);
    const double f = f_invariant(z);
    if (std::abs(f) <= 10.0 * tol * s4 || conj_dependent(z, tol)) continue;
    const SpanClass sc = span_class_det(z, conj(z), tol);
    c.check(f < 0.0 ? sc == SpanClass::Elliptic : sc == SpanClass::Hyperbolic);
  }
  return finish("f-span-correspondence", trials, c);
}

// Exact parabolic pairs and phase-real vectors pushed through a random
// isometry: detection must absorb the accumulated roundoff.  These checks
// keep the tolerance machinery honest; they fail for absurdly small tol.
PropertyResult prop_parabolic_detection(int trials, std::uint64_t seed, double tol) {
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const IsometryMatrix a = random_isometry(n, mix_seed(seed, 108 + 1000ULL * t), 4);
    CVec z1(n + 1, cplx{0.0, 0.0}), z2(n + 1, cplx{0.0, 0.0});
    z1[0] = z1[n] = cplx{1.0, 0.0};  // null vector
    z2[1] = cplx{1.0, 0.0};          // orthogonal positive vector
    const CVec w1 = apply_isometry(a, z1), w2 = apply_isometry(a, z2);
    c.check(span_class_det(w1, w2, tol) == SpanClass::Parabolic &&
            span_class_eig(w1, w2, tol) == SpanClass::Parabolic,
            std::abs(gram2(w1, w2).det()) / (norm_sq(w1) * norm_sq(w2)));
  }
  return finish("parabolic-band-detection", trials, c);
}

PropertyResult prop_real_detection(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 109));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const int m = 2 + t % (n - 1 > 0 ? n - 1 : 1);
    const double phi = rng.uniform(0.0, 6.28318530717958648);
    const cplx phase{std::cos(phi), std::sin(phi)};
    CVec z(n + 1);
    for (auto& v : z) v = phase * rng.gaussian();
    const bool dep = conj_dependent(z, tol);
    bool kind_ok = true;
    if (!in_lambda0(z, m, tol))
      kind_ok = real_intersection_kind(z, m, tol) == RealIntersectionKind::RealHyperplane;
    c.check(dep && kind_ok);
  }
  return finish("real-point-detection", trials, c);
}

// ----- projective -----

PropertyResult prop_normalize(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 110));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n);
    cplx a = rng.cgaussian();
    if (std::abs(a) < 0.1) a += cplx{1.0, 0.0};
    const ProjectivePoint p = normalize(z), q = normalize(a * z), r = normalize(p.rep);
    double worst = 0.0;
    for (size_t j = 0; j < p.rep.size(); ++j) {
      worst = std::max(worst, std::abs(p.rep[j] - q.rep[j]));
      worst = std::max(worst, std::abs(p.rep[j] - r.rep[j]));
    }
    bool unit_pivot = false;
    for (const cplx& v : p.rep)
      if (v == cplx{1.0, 0.0}) unit_pivot = true;
    c.check(worst <= 1e-12 && unit_pivot, worst);
  }
  return finish("normalize-canonical", trials, c);
}

PropertyResult prop_hyperplane_duality(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 111));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec p = rng.gaussian_vec(n), v = rng.gaussian_vec(n);
    const cplx pp = herm_inner(p, p);
    if (std::abs(pp) < 0.01 * norm_sq(p)) continue;
    const cplx lam = std::conj(herm_inner(p, v) / pp);
    const CVec w = v - lam * p;
    const TangentHyperplane hp{p}, hw{w};
    const bool direct = hp.contains(w, tol) && hw.contains(p, tol);
    // membership is symmetric for arbitrary pairs too
    const CVec u = rng.gaussian_vec(n);
    const bool symmetric = hp.contains(u, tol) == TangentHyperplane{u}.contains(p, tol);
    c.check(direct && symmetric, std::abs(herm_inner(p, w)) / (cnorm(p) * cnorm(w)));
  }
  return finish("hyperplane-duality", trials, c);
}

PropertyResult prop_q_project_conj(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 112));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 3 + t % 3;
    const int m = 2 + t % (n - 1);
    const CVec z = rng.gaussian_vec(n);
    const CVec a = q_project(conj(z), m, tol);
    const CVec b = conj(q_project(z, m, tol));
    c.check(a == b);
  }
  return finish("projection-conjugation-commute", trials, c);
}

PropertyResult prop_kernel_detection(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 113));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 3 + t % 3;
    const int m = 2 + t % (n - 1);
    CVec z(n + 1, cplx{0.0, 0.0});
    for (int j = m; j < n; ++j) z[j] = rng.cgaussian();
    if (cnorm(z) < 1e-6) continue;
    bool ok = in_lambda0(z, m, tol) &&
              real_intersection_kind(z, m, tol) == RealIntersectionKind::WholeRealSpace &&
              classify(z, m, tol) == RegionLabel::Lambda0;
    bool threw = false;
    try {
      q_project(z, m, tol);
    } catch (const std::domain_error&) {
      threw = true;
    }
    CVec off = z;
    off[0] += cplx{100.0 * tol * cnorm(z), 0.0};
    ok = ok && threw && !in_lambda0(off, m, tol);
    c.check(ok);
  }
  return finish("kernel-detection", trials, c);
}

// ----- limit set -----

PropertyResult prop_classify_scale_invariance(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 114));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const int m = 2 + t % (n - 1 > 0 ? n - 1 : 1);
    const CVec z = rng.gaussian_vec(n);
    cplx a = rng.cgaussian();
    if (std::abs(a) < 0.1) a += cplx{1.0, 0.0};
    c.check(classify(z, m, tol) == classify(a * z, m, tol));
  }
  return finish("classify-scale-invariance", trials, c);
}

PropertyResult prop_isometry_invariance(int trials, std::uint64_t seed, double tol) {
  Checker c;
  Rng rng(mix_seed(seed, 115));
  int compared = 0;
  for (int t = 0; t < trials; ++t) {
    const int m = 2 + t % 2;
    const int n = m + 2 * ((t / 2) % 2);
    const IsometryMatrix g = random_isometry(m, mix_seed(seed, 115 + 1000ULL * t), 4);
    const IsometryMatrix gi = embed_isometry(g, n);
    const CVec z = rng.gaussian_vec(n);
    const CVec gz = apply_isometry(gi, z);
    const double s4 = norm_sq(z) * norm_sq(z);
    const double fres = std::abs(f_invariant(gz) - f_invariant(z)) / s4;
    bool ok = fres <= 1e-8;

    // Boosts are not unitary, so each point owns its tolerance bands: compare
    // labels only when both sides sit 10x outside every band at their own scale.
    const auto robust = [m, tol](const CVec& q) {
      const double qs2 = norm_sq(q), qs4 = qs2 * qs2;
      const double fq = f_invariant(q);
      bool away = std::abs(fq) > 10.0 * tol * qs4 &&
                  std::abs(herm_inner(q, q).real()) > 10.0 * tol * qs2;
      if (away && m == 2 && fq < 0.0) {
        const double d = q[0].real() * q[1].imag() - q[1].real() * q[0].imag();
        away = std::abs(d) > 10.0 * tol * qs2;
      }
      return away;
    };
    const double s4g = norm_sq(gz) * norm_sq(gz);
    if (std::abs(f_invariant(z)) > 10.0 * tol * s4 &&
        std::abs(f_invariant(gz)) > 10.0 * tol * s4g)
      ok = ok && partition_label(gz, tol) == partition_label(z, tol);
    if (!in_lambda0(z, m, tol) && robust(q_project(z, m, tol)) &&
        robust(q_project(gz, m, tol))) {
      ++compared;
      ok = ok && classify(gz, m, tol) == classify(z, m, tol);
    }
    c.check(ok, fres);
  }
  std::ostringstream note;
  note << compared << " label comparisons away from boundaries";
  return finish("isometry-invariance", trials, c, note.str());
}

PropertyResult prop_factorization(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 116));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 3 + t % 3;
    const int m = 2 + t % (n - 1);
    const CVec z = rng.gaussian_vec(n);
    if (in_lambda0(z, m, tol)) continue;
    c.check(classify(z, m, tol) == classify_equal_dim(q_project(z, m, tol), tol));
  }
  return finish("classification-factorization", trials, c);
}

PropertyResult prop_region_partition(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 117));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    CVec z;
    bool real_point = (t % 5 == 0);
    if (real_point) {
      z.resize(n + 1);
      for (auto& v : z) v = cplx{rng.gaussian(), 0.0};
    } else {
      z = rng.gaussian_vec(n);
    }
    const double s2 = norm_sq(z), s4 = s2 * s2;
    if (s2 < 1e-12) continue;
    const bool dep = conj_dependent(z, tol);
    if (!dep && std::abs(f_invariant(z)) <= 10.0 * tol * s4) continue;
    if (dep && std::abs(herm_inner(z, z).real()) <= 10.0 * tol * s2) continue;
    const RegionLabel lab = classify_equal_dim(z, tol);
    const bool real_negative = dep && herm_inner(z, z).real() < 0.0;
    const bool upos = !dep && f_invariant(z) > 0.0;
    const bool uneg = !dep && f_invariant(z) < 0.0;
    // n = 2: both signs of f are discontinuity region; n > 2: only f > 0 is
    const bool expect = (n == 2) ? (upos || uneg || real_negative) : (upos || real_negative);
    c.check(is_omega(lab) == expect);
  }
  return finish("region-partition-consistency", trials, c);
}

PropertyResult prop_positive_side(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 118));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = (t % 2 == 0) ? rng.gaussian_vec(n) : make_parabolic_positive(rng, n);
    const double s2 = norm_sq(z), s4 = s2 * s2;
    if (conj_dependent(z, tol) || f_invariant(z) > tol * s4) continue;
    c.check(herm_inner(z, z).real() > -tol * s2);
  }
  return finish("nonpositive-f-forces-positive-vector", trials, c);
}

// ----- fibration -----

PropertyResult prop_eta_branch(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 119));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = rng.gaussian_vec(n);
    const cplx e = eta(z);
    const double rel = std::abs(e * e + herm_inner(z, conj(z))) / norm_sq(z);
    const bool branch = e.real() > 0.0 || (std::abs(e.real()) <= 1e-14 * std::abs(e) && e.imag() >= 0.0);
    c.check(rel <= 1e-12 && branch, rel);
  }
  return finish("eta-principal-branch", trials, c);
}

PropertyResult prop_midpoint_negative(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 120));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = random_f_positive(rng, n, tol);
    const CVec p = midpoint_lift(z, tol);
    double imag_worst = 0.0;
    for (const cplx& v : p) imag_worst = std::max(imag_worst, std::abs(v.imag()));
    const double pn2 = norm_sq(p);
    const double lhs = herm_inner(p, p).real();
    const cplx e = eta(z);
    const double e2 = std::norm(e);
    const double hz = herm_inner(z, z).real();
    const double rhs = 2.0 * e2 * (hz - e2);
    // scale of the terms both sides cancel from, not of the tiny difference
    const double scale = pn2 + 2.0 * e2 * (std::abs(hz) + e2);
    const double rel = std::abs(lhs - rhs) / scale;
    c.check(lhs < 0.0 && rel <= 1e-10 && imag_worst <= 1e-10 * std::sqrt(pn2), rel);
  }
  return finish("midpoint-negativity", trials, c);
}

PropertyResult prop_midpoint_equivariance(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 121));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const IsometryMatrix a = random_isometry(n, mix_seed(seed, 121 + 1000ULL * t), 4);
    const CVec z = random_f_positive(rng, n, tol);
    const CVec lhs = midpoint_lift_raw(apply_isometry(a, z));
    const CVec rhs = apply_isometry(a, midpoint_lift_raw(z));
    const double scale = cnorm(lhs) + cnorm(rhs);
    const double rel = cnorm(lhs - rhs) / scale;
    c.check(rel <= 1e-9, rel);
  }
  return finish("midpoint-equivariance", trials, c);
}

// The lift of a rescaled point is |a|^2 times the original lift, up to the
// branch of the square root inside eta; the projective image is exactly the
// same point either way.
PropertyResult prop_midpoint_scaling(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 122));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = random_f_positive(rng, n, tol);
    cplx a = rng.cgaussian();
    if (std::abs(a) < 0.1) a += cplx{0.7, -0.4};
    const cplx ae = a * eta(z);
    const double sgn = (std::abs(eta(a * z) - ae) <= std::abs(eta(a * z) + ae)) ? 1.0 : -1.0;
    const CVec lhs = midpoint_lift_raw(a * z);
    const CVec rhs = cplx{sgn * std::norm(a), 0.0} * midpoint_lift_raw(z);
    const double scale = cnorm(lhs) + cnorm(rhs);
    double rel = cnorm(lhs - rhs) / scale;

    const ProjectivePoint pa = normalize(lhs), pz = normalize(midpoint_lift_raw(z));
    for (size_t j = 0; j < pa.rep.size(); ++j)
      rel = std::max(rel, std::abs(pa.rep[j] - pz.rep[j]));
    c.check(rel <= 1e-10, rel);
  }
  return finish("midpoint-scaling", trials, c);
}

PropertyResult prop_midpoint_real_fixed(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 123));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    CVec x(n + 1);
    for (int j = 0; j < n; ++j) x[j] = cplx{0.3 * rng.gaussian(), 0.0};
    x[n] = cplx{1.0 + std::abs(rng.gaussian()), 0.0};
    if (herm_inner(x, x).real() >= -tol * norm_sq(x)) continue;
    const CVec p = midpoint_lift(x, tol);
    const cplx e = eta(x);
    const CVec expect = (2.0 * e) * x;
    const double rel = cnorm(p - expect) / cnorm(expect);
    const ProjectivePoint pr = real_projection(x, tol);
    const ProjectivePoint xr = normalize(x);
    double proj_res = 0.0;
    for (size_t j = 0; j < pr.rep.size(); ++j)
      proj_res = std::max(proj_res, std::abs(pr.rep[j] - xr.rep[j]));
    c.check(rel <= 1e-12 && proj_res <= 1e-12, std::max(rel, proj_res));
  }
  return finish("midpoint-fixes-real-points", trials, c);
}

PropertyResult prop_parabolic_orthogonality(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 124));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const CVec z = make_parabolic_positive(rng, n);
    const CVec p = midpoint_lift_raw(z);
    const double scale = cnorm(z) * cnorm(p);
    if (scale < 1e-12) continue;
    const double r1 = std::abs(herm_inner(z, p)) / scale;
    const double r2 = std::abs(herm_inner(conj(z), p)) / scale;
    const double rel = std::max(r1, r2);
    c.check(rel <= 1e-7, rel);
  }
  return finish("parabolic-orthogonality", trials, c);
}

PropertyResult prop_frame_matrix(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 125));
  Checker c;
  std::set<int> negative_det_dims;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    RVec tt(n);
    tt[0] = rng.uniform(-2.0, 2.0);
    for (int j = 1; j < n; ++j) tt[j] = rng.uniform(-3.14159265358979, 3.14159265358979);
    const IsometryMatrix a = frame_matrix(tt);
    const double jres = j_residual(a);
    const double dt = det(a);
    if (dt < 0.0) negative_det_dims.insert(n);
    CVec origin(n + 1, cplx{0.0, 0.0});
    origin[n] = cplx{1.0, 0.0};
    const ProjectivePoint carried = normalize(apply_isometry(a, origin));
    const ProjectivePoint base = normalize(base_point(tt));
    double bres = 0.0;
    for (size_t j = 0; j < carried.rep.size(); ++j)
      bres = std::max(bres, std::abs(carried.rep[j] - base.rep[j]));
    const double res = std::max({jres, bres, std::abs(std::abs(dt) - 1.0)});
    c.check(res <= 1e-10, res);
  }
  std::ostringstream note;
  if (!negative_det_dims.empty()) {
    note << "det = -1 for n in {";
    bool first = true;
    for (int n : negative_det_dims) {
      note << (first ? "" : ",") << n;
      first = false;
    }
    note << "}";
  }
  return finish("frame-matrix-isometry", trials, c, note.str());
}

PropertyResult prop_adapted_basis(int trials, std::uint64_t seed, double) {
  Rng rng(mix_seed(seed, 126));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    RVec tt(n);
    tt[0] = rng.uniform(-2.0, 2.0);
    for (int j = 1; j < n; ++j) tt[j] = rng.uniform(-3.14159265358979, 3.14159265358979);
    const std::vector<RVec> w = adapted_basis(tt);
    IsometryMatrix m;
    m.n = n;
    m.e.assign((n + 1) * (n + 1), 0.0);
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i) m.at(i, j) = w[j][i];
    c.check(std::abs(det(m)) > 1e-6);
  }
  return finish("adapted-basis-independence", trials, c);
}

PropertyResult prop_embedding(int trials, std::uint64_t seed, double) {
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int m = 2 + t % 3;
    const int n = m + 1 + t % 2;
    const IsometryMatrix g = random_isometry(m, mix_seed(seed, 127 + 1000ULL * t), 4);
    const IsometryMatrix h = random_isometry(m, mix_seed(seed, 128 + 1000ULL * t), 3);
    const IsometryMatrix lhs = embed_isometry(mat_mul(g, h), n);
    const IsometryMatrix rhs = mat_mul(embed_isometry(g, n), embed_isometry(h, n));
    double worst = 0.0, scale = 0.0;
    for (size_t i = 0; i < lhs.e.size(); ++i) {
      worst = std::max(worst, std::abs(lhs.e[i] - rhs.e[i]));
      scale = std::max(scale, std::abs(lhs.e[i]));
    }
    const double rel = worst / std::max(scale, 1.0);
    // middle block coordinates must be fixed exactly
    bool fixes = true;
    const IsometryMatrix ge = embed_isometry(g, n);
    for (int j = m; j < n; ++j)
      for (int i = 0; i <= n; ++i)
        if (ge.at(i, j) != (i == j ? 1.0 : 0.0)) fixes = false;
    c.check(rel <= 1e-10 && fixes && j_residual(ge) <= 1e-10, rel);
  }
  return finish("embedding-homomorphism", trials, c);
}

PropertyResult prop_random_isometry(int trials, std::uint64_t seed, double) {
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int m = 2 + t % 4;
    const std::uint64_t s = mix_seed(seed, 129 + 1000ULL * t);
    const IsometryMatrix a = random_isometry(m, s, 4);
    const IsometryMatrix b = random_isometry(m, s, 4);
    const double res = std::max(j_residual(a), std::abs(det(a) - 1.0));
    c.check(res <= 1e-8 && a.e == b.e && a.at(m, m) >= 1.0 - 1e-10, res);
  }
  return finish("random-isometry-invariants", trials, c);
}

PropertyResult prop_fiber_projection(int trials, std::uint64_t seed, double tol) {
  Rng rng(mix_seed(seed, 130));
  Checker c;
  for (int t = 0; t < trials; ++t) {
    const int n = 3 + t % 2;
    RVec tt(n), y(n);
    tt[0] = rng.uniform(-2.0, 2.0);
    for (int j = 1; j < n; ++j) tt[j] = rng.uniform(-3.14159265358979, 3.14159265358979);
    for (auto& v : y) v = rng.gaussian();
    const double x_last = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * (0.1 + std::abs(rng.gaussian()));
    const ProjectivePoint fp = fiber_point(tt, y, x_last);
    const ProjectivePoint proj = real_projection(fp.rep, tol);
    const ProjectivePoint base = normalize(base_point(tt));
    double res = 0.0;
    for (size_t j = 0; j < proj.rep.size(); ++j)
      res = std::max(res, std::abs(proj.rep[j] - base.rep[j]));
    c.check(res <= 1e-8, res);
  }
  return finish("fiber-projects-to-base", trials, c);
}

// ----- census / slice -----

PropertyResult prop_census_determinism(int, std::uint64_t seed, double tol) {
  Checker c;
  CensusConfig cfg;
  cfg.m = 2;
  cfg.n = 2;
  cfg.samples = 150;
  cfg.edge_candidates = 400;
  cfg.segment_steps = 16;
  cfg.seed = seed;
  cfg.tol = tol;
  const CensusReport a = run_census(cfg, Exec::Parallel);
  const CensusReport b = run_census(cfg, Exec::Parallel);
  const CensusReport s = run_census(cfg, Exec::Serial);
  c.check(a == b && a == s && a.cross_label_edges == 0);
  return finish("census-determinism", 3, c);
}

PropertyResult prop_slice_consistency(int, std::uint64_t seed, double tol) {
  Checker c;
  Rng rng(mix_seed(seed, 131));
  SliceSpec spec;
  spec.m = 2;
  spec.n = 3;
  spec.center = {cplx{1, 0}, cplx{0, 1}, cplx{0, 0}, cplx{0, 0}};
  spec.dir_u = rng.gaussian_vec(3);
  spec.dir_v = rng.gaussian_vec(3);
  spec.half_width = 0.8;
  spec.res = 16;
  spec.tol = tol;
  const SliceResult r = render_slice(spec, Exec::Parallel);
  const SliceResult rs = render_slice(spec, Exec::Serial);
  int checked = 0;
  bool ok = r.labels == rs.labels;
  for (int row = 0; row < spec.res && ok; ++row)
    for (int col = 0; col < spec.res && ok; ++col) {
      const double a = -spec.half_width + 2.0 * spec.half_width * (col + 0.5) / spec.res;
      const double b = spec.half_width - 2.0 * spec.half_width * (row + 0.5) / spec.res;
      CVec z(4);
      for (size_t j = 0; j < 4; ++j)
        z[j] = spec.center[j] + a * spec.dir_u[j] + b * spec.dir_v[j];
      const int stored = r.label_at(row, col);
      if (stored < 0) continue;
      ++checked;
      ok = stored == static_cast<int>(classify(z, spec.m, spec.tol));
    }
  c.check(ok && checked > 0);
  return finish("slice-reclassification", 1, c);
}

}  // namespace

VerifyReport verify_suite(int trials, std::uint64_t seed, double tol) {
  VerifyReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.tol = tol;

  using PropFn = std::function<PropertyResult(int, std::uint64_t, double)>;
  const std::vector<PropFn> props = {
      prop_conjugate_symmetry, prop_sesquilinear,      prop_span_oracle,
      prop_eig_product,        prop_f_two_routes,      prop_f_homogeneity,
      prop_f_span_correspondence, prop_parabolic_detection, prop_real_detection,
      prop_normalize,          prop_hyperplane_duality, prop_q_project_conj,
      prop_kernel_detection,   prop_classify_scale_invariance, prop_isometry_invariance,
      prop_factorization,      prop_region_partition,  prop_positive_side,
      prop_eta_branch,         prop_midpoint_negative, prop_midpoint_equivariance,
      prop_midpoint_scaling,   prop_midpoint_real_fixed, prop_parabolic_orthogonality,
      prop_frame_matrix,       prop_adapted_basis,     prop_embedding,
      prop_random_isometry,    prop_fiber_projection,  prop_census_determinism,
      prop_slice_consistency,
  };

  rep.overall_pass = true;
  for (const PropFn& fn : props) {
    PropertyResult r;
    try {
      r = fn(trials, seed, tol);
    } catch (const std::exception& ex) {
      r.name = "exception";
      r.trials = trials;
      r.failures = trials;
      r.pass = false;
      r.note = ex.what();
    }
    if (!r.pass) rep.overall_pass = false;
    if (!r.note.empty() && r.name == "frame-matrix-isometry" && r.note.rfind("det", 0) == 0)
      rep.findings.push_back("frame matrix spatial parity: " + r.note +
                             " (orientation alternates with n; J-orthogonality and base point unaffected)");
    rep.properties.push_back(std::move(r));
  }
  return rep;
}

std::string verify_report_json(const VerifyReport& rep) {
  nlohmann::json j;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["tol"] = rep.tol;
  j["overall_pass"] = rep.overall_pass;
  j["findings"] = rep.findings;
  j["properties"] = nlohmann::json::array();
  for (const PropertyResult& p : rep.properties)
    j["properties"].push_back({{"name", p.name},
                               {"trials", p.trials},
                               {"failures", p.failures},
                               {"max_residual", p.max_residual},
                               {"pass", p.pass},
                               {"note", p.note}});
  return j.dump(2);
}

std::string verify_report_text(const VerifyReport& rep) {
  std::ostringstream out;
  for (const PropertyResult& p : rep.properties) {
    out << (p.pass ? "[PASS] " : "[FAIL] ") << p.name << "  failures=" << p.failures << "/"
        << p.trials << "  max_residual=" << p.max_residual;
    if (!p.note.empty()) out << "  (" << p.note << ")";
    out << "\n";
  }
  for (const std::string& f : rep.findings) out << "[NOTE] " << f << "\n";
  out << (rep.overall_pass ? "all properties passed" : "FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace limitset
