#include "limitset/isometry.hpp"

#include "limitset/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace limitset {

IsometryMatrix identity_isometry(int n) {
  IsometryMatrix a;
  a.n = n;
  a.e.assign((n + 1) * (n + 1), 0.0);
  for (int i = 0; i <= n; ++i) a.at(i, i) = 1.0;
  return a;
}

IsometryMatrix mat_mul(const IsometryMatrix& a, const IsometryMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("mat_mul: dimension mismatch");
  const int d = a.n + 1;
  IsometryMatrix c;
  c.n = a.n;
  c.e.assign(d * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < d; ++j) c.e[i * d + j] += aik * b.e[k * d + j];
    }
  return c;
}

CVec apply_isometry(const IsometryMatrix& a, const CVec& z) {
  const int d = a.n + 1;
  if (static_cast<int>(z.size()) != d) throw std::invalid_argument("apply: dimension mismatch");
  CVec w(d, cplx{0.0, 0.0});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) w[i] += a.at(i, j) * z[j];
  return w;
}

RVec apply_isometry(const IsometryMatrix& a, const RVec& x) {
  const int d = a.n + 1;
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("apply: dimension mismatch");
  RVec w(d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) w[i] += a.at(i, j) * x[j];
  return w;
}

double j_residual(const IsometryMatrix& a) {
  const int d = a.n + 1;
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) {
        const double sgn = (k == d - 1) ? -1.0 : 1.0;
        s += sgn * a.at(k, i) * a.at(k, j);
      }
      const double expected = (i != j) ? 0.0 : ((i == d - 1) ? -1.0 : 1.0);
      worst = std::max(worst, std::abs(s - expected));
    }
  return worst;
}

double det(const IsometryMatrix& a) {
  const int d = a.n + 1;
  RVec m = a.e;
  double sign = 1.0;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(m[r * d + col]) > std::abs(m[piv * d + col])) piv = r;
    if (m[piv * d + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < d; ++j) std::swap(m[piv * d + j], m[col * d + j]);
      sign = -sign;
    }
    for (int r = col + 1; r < d; ++r) {
      const double fac = m[r * d + col] / m[col * d + col];
      for (int j = col; j < d; ++j) m[r * d + j] -= fac * m[col * d + j];
    }
  }
  double p = sign;
  for (int i = 0; i < d; ++i) p *= m[i * d + i];
  return p;
}

IsometryMatrix make_rotation(int n, const RVec& block) {
  if (static_cast<int>(block.size()) != n * n)
    throw std::invalid_argument("make_rotation: block size mismatch");
  IsometryMatrix a = identity_isometry(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = block[i * n + j];
  return a;
}

IsometryMatrix make_boost(int n, int j, double s) {
  if (j < 0 || j >= n) throw std::invalid_argument("make_boost: axis out of range");
  IsometryMatrix a = identity_isometry(n);
  a.at(j, j) = std::cosh(s);
  a.at(j, n) = std::sinh(s);
  a.at(n, j) = std::sinh(s);
  a.at(n, n) = std::cosh(s);
  return a;
}

// Unit vector of the polar angles t_{n+2-K}..t_n, length K >= 2:
// base (cos t_n, sin t_n), each further angle wraps the previous vector.
static RVec partial_spherical(const RVec& t, int K) {
  const int n = static_cast<int>(t.size());
  RVec u = {std::cos(t[n - 1]), std::sin(t[n - 1])};
  for (int k = 3; k <= K; ++k) {
    const double a = t[n + 1 - k];  // t_{n+2-k}
    RVec w(k);
    for (int i = 0; i < k - 1; ++i) w[i] = u[i] * std::sin(a);
    w[k - 1] = std::cos(a);
    u = std::move(w);
  }
  return u;
}

IsometryMatrix frame_matrix(const RVec& t) {
  const int n = static_cast<int>(t.size());
  if (n < 2) throw std::invalid_argument("frame_matrix: need n >= 2 coordinates");
  IsometryMatrix a;
  a.n = n;
  a.e.assign((n + 1) * (n + 1), 0.0);

  const RVec u = partial_spherical(t, n);
  const double ch = std::cosh(t[0]), sh = std::sinh(t[0]);
  for (int i = 0; i < n; ++i) {
    a.at(i, 0) = ch * u[i];
    a.at(i, n) = sh * u[i];
  }
  a.at(n, 0) = sh;
  a.at(n, n) = ch;

  // Angular columns: for j < n the leading block is the sphere vector of the
  // trailing angles scaled by cos(t_j), then the -sin(t_j) pivot, then zeros.
  for (int j = 2; j <= n; ++j) {
    if (j == n) {
      a.at(0, n - 1) = -std::sin(t[n - 1]);
      a.at(1, n - 1) = std::cos(t[n - 1]);
      continue;
    }
    const RVec w = partial_spherical(t, n + 1 - j);
    for (int i = 0; i < n + 1 - j; ++i) a.at(i, j - 1) = w[i] * std::cos(t[j - 1]);
    a.at(n + 1 - j, j - 1) = -std::sin(t[j - 1]);
  }
  return a;
}

CVec base_point(const RVec& t) {
  const int n = static_cast<int>(t.size());
  const RVec u = partial_spherical(t, n);
  const double th = std::tanh(t[0]);
  CVec x(n + 1);
  for (int i = 0; i < n; ++i) x[i] = cplx{th * u[i], 0.0};
  x[n] = cplx{1.0, 0.0};
  return x;
}

std::vector<RVec> adapted_basis(const RVec& t) {
  const IsometryMatrix a = frame_matrix(t);
  const int n = a.n;
  const double ch = std::cosh(t[0]);
  std::vector<RVec> w(n + 1, RVec(n + 1, 0.0));
  for (int j = 0; j <= n; ++j) {
    const double fac = (j == 0 || j == n) ? 1.0 / ch : 1.0;
    for (int i = 0; i <= n; ++i) w[j][i] = a.at(i, j) * fac;
  }
  return w;
}

IsometryMatrix embed_isometry(const IsometryMatrix& g, int n) {
  const int m = g.n;
  if (m > n) throw std::invalid_argument("embed_isometry: m exceeds n");
  IsometryMatrix a = identity_isometry(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a.at(i, j) = g.at(i, j);
  for (int i = 0; i < m; ++i) {
    a.at(i, n) = g.at(i, m);
    a.at(n, i) = g.at(m, i);
  }
  a.at(n, n) = g.at(m, m);
  return a;
}

// Gram-Schmidt orthonormalization of a random Gaussian block, det fixed
// to +1 by flipping the last column if needed.
static RVec random_rotation_block(int m, Rng& rng) {
  while (true) {
    std::vector<RVec> cols(m, RVec(m));
    for (auto& c : cols)
      for (auto& v : c) v = rng.gaussian();
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      for (int i = 0; i < j; ++i) {
        double dot = 0.0;
        for (int r = 0; r < m; ++r) dot += cols[j][r] * cols[i][r];
        for (int r = 0; r < m; ++r) cols[j][r] -= dot * cols[i][r];
      }
      double nn = 0.0;
      for (double v : cols[j]) nn += v * v;
      if (nn < 1e-16) {
        ok = false;
        break;
      }
      const double inv = 1.0 / std::sqrt(nn);
      for (double& v : cols[j]) v *= inv;
    }
    if (!ok) continue;
    RVec block(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) block[i * m + j] = cols[j][i];
    IsometryMatrix probe = make_rotation(m, block);
    if (det(probe) < 0.0)
      for (int i = 0; i < m; ++i) block[i * m + (m - 1)] = -block[i * m + (m - 1)];
    return block;
  }
}

IsometryMatrix random_isometry(int m, std::uint64_t seed, int k) {
  if (m < 2) throw std::invalid_argument("random_isometry: need m >= 2");
  if (k < 1) throw std::invalid_argument("random_isometry: need k >= 1");
  Rng rng(mix_seed(seed, 0xA11CE));
  IsometryMatrix a = identity_isometry(m);
  for (int i = 0; i < k; ++i) {
    if (i % 2 == 0) {
      a = mat_mul(a, make_rotation(m, random_rotation_block(m, rng)));
    } else {
      const int axis = static_cast<int>(rng.below(m));
      a = mat_mul(a, make_boost(m, axis, rng.uniform(-2.0, 2.0)));
    }
  }
  return a;
}

}  // namespace limitset
