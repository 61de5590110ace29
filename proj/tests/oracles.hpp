#pragma once
// Independent reference implementations used only by the tests. They share no code with
// the library: small fixed-size integer arithmetic, plain enumeration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using i128 = __int128;
using Pt = std::vector<std::int64_t>;

// Exact fraction over 128-bit integers; fine for the tiny entries used in tests.
struct Frac {
  i128 num = 0;
  i128 den = 1;

  static i128 gcd(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  Frac() = default;
  Frac(i128 n, i128 d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(const Frac& a, const Frac& b) { return {a.num * b.den, a.den * b.num}; }
  bool zero() const { return num == 0; }
};

// Rank over Q by plain Gaussian elimination on fractions.
inline std::size_t rank(std::vector<std::vector<Frac>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].zero()) continue;
      const Frac f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_int(const std::vector<std::vector<std::int64_t>>& a) {
  std::vector<std::vector<Frac>> m;
  for (const auto& row : a) {
    m.emplace_back();
    for (auto x : row) m.back().emplace_back(x);
  }
  return rank(m);
}

// Affine rank from difference vectors.
inline std::size_t affine_rank(const std::vector<Pt>& pts) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    rows.emplace_back();
    for (std::size_t c = 0; c < pts[0].size(); ++c) rows.back().push_back(pts[i][c] - pts[0][c]);
  }
  if (rows.empty()) return 0;
  return rank_int(rows);
}

// Rank of the d x r matrix whose columns are the points.
inline std::size_t linear_rank(const std::vector<Pt>& pts) {
  std::vector<std::vector<std::int64_t>> rows(pts[0].size());
  for (std::size_t c = 0; c < pts[0].size(); ++c)
    for (const auto& p : pts) rows[c].push_back(p[c]);
  return rank_int(rows);
}

// Determinant by Leibniz expansion (n <= 6).
inline i128 det(const std::vector<std::vector<i128>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  i128 total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    i128 term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// d+2 points on a common sphere or hyperplane.
inline bool sphere_or_flat(const std::vector<Pt>& pts) {
  std::vector<std::vector<i128>> m;
  for (const auto& p : pts) {
    std::vector<i128> row{1};
    i128 nn = 0;
    for (auto x : p) {
      row.push_back(x);
      nn += static_cast<i128>(x) * x;
    }
    row.push_back(nn);
    m.push_back(row);
  }
  return det(m) == 0;
}

// Some sphere of positive radius holds all points: the system 2 c.x - s = |x|^2 is
// consistent (rank of coefficients equals rank of the augmented matrix).
inline bool on_genuine_sphere(const std::vector<Pt>& pts) {
  std::vector<std::vector<Frac>> a, ab;
  for (const auto& p : pts) {
    std::vector<Frac> row;
    i128 nn = 0;
    for (auto x : p) {
      row.emplace_back(2 * static_cast<i128>(x));
      nn += static_cast<i128>(x) * x;
    }
    row.emplace_back(-1);
    a.push_back(row);
    row.emplace_back(nn);
    ab.push_back(row);
  }
  return rank(a) == rank(ab);
}

// Four distinct planar points with a fixed-point-free mirror symmetry, not collinear:
// some pairing {p,q},{r,s} where both pairs have the same perpendicular bisector.
inline bool isosceles_trapezoid(const std::array<Pt, 4>& v) {
  if (affine_rank({v[0], v[1], v[2], v[3]}) < 2) return false;
  // bisector of (p, q): 2(q-p).x = |q|^2 - |p|^2, compared up to scale
  const auto same_bisector = [](const Pt& p, const Pt& q, const Pt& r, const Pt& s) {
    const i128 a1 = 2 * (q[0] - p[0]), b1 = 2 * (q[1] - p[1]);
    const i128 c1 = q[0] * q[0] + q[1] * q[1] - p[0] * p[0] - p[1] * p[1];
    const i128 a2 = 2 * (s[0] - r[0]), b2 = 2 * (s[1] - r[1]);
    const i128 c2 = s[0] * s[0] + s[1] * s[1] - r[0] * r[0] - r[1] * r[1];
    return a1 * b2 == a2 * b1 && a1 * c2 == a2 * c1 && b1 * c2 == b2 * c1;
  };
  return same_bisector(v[0], v[1], v[2], v[3]) || same_bisector(v[0], v[2], v[1], v[3]) ||
         same_bisector(v[0], v[3], v[1], v[2]);
}

inline std::vector<Pt> grid(std::int64_t n, std::size_t d) {
  std::vector<Pt> out;
  Pt cur(d, 1);
  while (true) {
    out.push_back(cur);
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == n) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// Calls f(indices) for every k-subset of {0..m-1}.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls f(indices) for every ordered k-tuple (repetition allowed) over {0..m-1}.
template <class F>
void for_each_tuple(std::size_t m, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - 1) idx[--i] = 0;
    if (i == 0) return;
    ++idx[i - 1];
  }
}

// Unordered 4-subsets of [n]^2 on a genuine circle.
inline std::uint64_t cyclic_quadrilaterals(std::int64_t n) {
  const auto g = grid(n, 2);
  std::uint64_t count = 0;
  for_each_subset(g.size(), 4, [&](const std::vector<std::size_t>& s) {
    const std::vector<Pt> t{g[s[0]], g[s[1]], g[s[2]], g[s[3]]};
    if (sphere_or_flat(t) && affine_rank(t) == 2) ++count;
  });
  return count;
}

inline std::uint64_t isosceles_trapezia(std::int64_t n) {
  const auto g = grid(n, 2);
  std::uint64_t count = 0;
  for_each_subset(g.size(), 4, [&](const std::vector<std::size_t>& s) {
    if (isosceles_trapezoid({g[s[0]], g[s[1]], g[s[2]], g[s[3]]})) ++count;
  });
  return count;
}

// Ordered r-tuples of distinct collinear points of [n]^2.
inline std::uint64_t collinear_ordered(std::int64_t n, std::size_t r) {
  const auto g = grid(n, 2);
  std::uint64_t count = 0;
  for_each_subset(g.size(), r, [&](const std::vector<std::size_t>& s) {
    std::vector<Pt> t;
    for (auto i : s) t.push_back(g[i]);
    if (affine_rank(t) <= 1) ++count;
  });
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= r; ++i) f *= i;
  return count * f;
}

// Ordered r-tuples of [n]^d whose points lie on a common k-flat (affine) or k-dimensional
// subspace (linear), with and without repeated points.
struct FlatCounts {
  std::uint64_t affine_distinct = 0;
  std::uint64_t affine_repetition = 0;
  std::uint64_t linear_distinct = 0;
  std::uint64_t linear_repetition = 0;
};

inline FlatCounts flat_tuples(std::int64_t n, std::size_t d, std::size_t k, std::size_t r) {
  const auto g = grid(n, d);
  FlatCounts c;
  for_each_tuple(g.size(), r, [&](const std::vector<std::size_t>& s) {
    std::vector<Pt> t;
    for (auto i : s) t.push_back(g[i]);
    std::vector<std::size_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (affine_rank(t) <= k) {
      ++c.affine_repetition;
      if (distinct) ++c.affine_distinct;
    }
    if (linear_rank(t) <= k) {
      ++c.linear_repetition;
      if (distinct) ++c.linear_distinct;
    }
  });
  return c;
}

}  // namespace oracle
