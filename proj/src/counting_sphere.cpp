#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "latdeg/counting.hpp"
#include "latdeg/parallel.hpp"

namespace latdeg {

namespace {

struct Bucket {
  std::set<std::size_t> members;
  std::uint64_t hits = 0;
  std::size_t flat_dim = 0;
};

// Reduced row echelon form of the rows of m (rank rows kept), in place.
std::size_t rref(std::vector<std::vector<Rational>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  m.resize(rank);
  return rank;
}

// Solves a x = b for a square nonsingular a; empty result when singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Key of the (j-1)-sphere through an affinely independent (j+1)-subset: its centre, squared
// radius and the direction space of its affine hull. Empty when the subset is dependent.
std::string spherical_span_key(const std::vector<LatticePoint>& pts, const std::vector<std::size_t>& subset,
                               std::size_t d) {
  const std::size_t j = subset.size() - 1;
  const LatticePoint& p0 = pts[subset[0]];
  std::vector<std::vector<std::int64_t>> e(j, std::vector<std::int64_t>(d));
  for (std::size_t i = 0; i < j; ++i)
    for (std::size_t c = 0; c < d; ++c) e[i][c] = pts[subset[i + 1]][c] - p0[c];
  std::vector<std::vector<Rational>> gram(j, std::vector<Rational>(j));
  std::vector<Rational> rhs(j);
  for (std::size_t a = 0; a < j; ++a) {
    for (std::size_t b = 0; b < j; ++b) {
      std::int64_t dot = 0;
      for (std::size_t c = 0; c < d; ++c) dot += e[a][c] * e[b][c];
      gram[a][b] = 2 * dot;
    }
    rhs[a] = gram[a][a] / 2;
  }
  // centre = p0 + sum lambda_i e_i with 2 G lambda = diag(G)
  const auto lambda = solve(gram, rhs);
  if (lambda.empty()) return {};
  std::vector<Rational> offset(d, 0);
  for (std::size_t i = 0; i < j; ++i)
    for (std::size_t c = 0; c < d; ++c) offset[c] += lambda[i] * e[i][c];
  Rational r2 = 0;
  for (const auto& x : offset) r2 += x * x;
  std::vector<std::vector<Rational>> dirs(j, std::vector<Rational>(d));
  for (std::size_t i = 0; i < j; ++i)
    for (std::size_t c = 0; c < d; ++c) dirs[i][c] = e[i][c];
  rref(dirs);
  std::string key = std::to_string(j) + "|";
  for (std::size_t c = 0; c < d; ++c) {
    const Rational x = offset[c] + p0[c];
    key += x.get_str() + ",";
  }
  key += "|" + r2.get_str() + "|";
  for (const auto& row : dirs)
    for (const auto& x : row) key += x.get_str() + ",";
  return key;
}

}  // namespace

CountResult count_conspheric_hash(std::int64_t n, std::size_t d, double budget) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const auto pts = grid_points(n, d);
  const std::size_t total = pts.size();
  const BigInt work = binomial(total, static_cast<unsigned>(d + 1));
  if (work > BigInt(budget)) throw BudgetExceeded("instance too large for sphere hashing");

  // Every conspheric (d+2)-subset T lies on a unique smallest sphere: the one through T
  // inside its affine hull, of dimension affine_rank(T) - 1. Subsets are grouped by that
  // spherical span; each span is found from its affinely independent generating subsets.
  std::map<std::string, Bucket> spans;
  for (std::size_t j = 2; j <= d; ++j) {
    std::vector<std::map<std::string, Bucket>> partial(total);
    parallel_chunks(total, [&](std::size_t first) {
      auto& local = partial[first];
      std::vector<std::size_t> idx(j + 1);
      idx[0] = first;
      for (std::size_t i = 1; i <= j; ++i) idx[i] = first + i;
      if (idx[j] >= total) return;
      while (true) {
        const std::string key = spherical_span_key(pts, idx, d);
        if (!key.empty()) {
          auto& b = local[key];
          b.flat_dim = j;
          ++b.hits;
          b.members.insert(idx.begin(), idx.end());
        }
        std::size_t i = j;
        while (i > 0 && idx[i] == total - (j + 1) + i) --i;
        if (i == 0) break;
        ++idx[i];
        for (std::size_t k = i + 1; k <= j; ++k) idx[k] = idx[k - 1] + 1;
      }
    });
    for (auto& local : partial) {
      for (auto& [key, b] : local) {
        auto& dst = spans[key];
        dst.flat_dim = b.flat_dim;
        dst.hits += b.hits;
        dst.members.insert(b.members.begin(), b.members.end());
      }
    }
  }

  const std::size_t r = d + 2;
  BigInt unordered = 0;
  std::vector<LatticePoint> subset(r);
  for (const auto& [key, b] : spans) {
    const std::size_t m = b.members.size();
    if (m < r) continue;
    if (b.flat_dim == 2) {
      // Every triple of a circle is independent and generates it exactly once.
      if (BigInt(static_cast<unsigned long>(b.hits)) != binomial(m, 3))
        throw InternalError("circle bucket multiplicity is not C(m, 3)");
      unordered += binomial(m, static_cast<unsigned>(r));
      continue;
    }
    if (BigInt(static_cast<unsigned long>(b.hits)) > binomial(m, static_cast<unsigned>(b.flat_dim + 1)))
      throw InternalError("sphere bucket multiplicity exceeds C(m, j+1)");
    const std::vector<std::size_t> members(b.members.begin(), b.members.end());
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      for (std::size_t i = 0; i < r; ++i) subset[i] = pts[members[idx[i]]];
      if (affine_rank(subset) == b.flat_dim) unordered += 1;
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t k = i; k < r; ++k) idx[k] = idx[k - 1] + 1;
    }
  }

  CountResult res{n, d, ConfigFamily::conspheric(), unordered * factorial(static_cast<unsigned>(r)),
                  CountMethod::CircumsphereHash, 0};
  res.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace latdeg
