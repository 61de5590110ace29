#include "latdeg/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latdeg {

bool LatticePoint::in_grid(Coord n) const {
  return std::all_of(coords.begin(), coords.end(), [n](Coord c) { return c >= 1 && c <= n; });
}

BigInt LatticePoint::norm2() const {
  BigInt s = 0;
  for (Coord c : coords) {
    const BigInt v = big_from_i64(c);
    s += v * v;
  }
  return s;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

std::vector<LatticePoint> grid_points(Coord n, std::size_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("grid_points: n and d must be positive");
  std::vector<LatticePoint> out;
  std::vector<Coord> cur(d, 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == n) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

LineKey LineKey::make(Coord a, Coord b, Coord c) {
  if (a == 0 && b == 0) throw std::invalid_argument("LineKey: zero normal");
  Coord g = std::gcd(std::gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

bool SphereKey::operator==(const SphereKey& other) const {
  return r2 == other.r2 && center == other.center;
}

std::string SphereKey::encode() const {
  std::string out;
  for (const auto& c : center) out += to_fraction_string(c) + ",";
  out += "|" + to_fraction_string(r2);
  return out;
}

IntegerMatrix::IntegerMatrix(std::size_t r, std::size_t c, std::vector<BigInt> e)
    : rows(r), cols(c), entries(std::move(e)) {
  if (entries.size() != rows * cols) throw std::invalid_argument("IntegerMatrix: entry count mismatch");
}

namespace {

// Fraction-free row echelon form in place. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss_eliminate(IntegerMatrix& m, int& sign) {
  sign = 1;
  BigInt prev = 1;
  std::size_t r = 0;
  BigInt t;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

IntegerMatrix point_rows(std::span<const LatticePoint> points, bool leading_one, bool trailing_norm) {
  const std::size_t d = points.front().dim();
  const std::size_t cols = d + (leading_one ? 1 : 0) + (trailing_norm ? 1 : 0);
  IntegerMatrix m(points.size(), cols);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t j = 0;
    if (leading_one) m.at(i, j++) = 1;
    for (std::size_t k = 0; k < d; ++k) m.at(i, j++) = big_from_i64(points[i][k]);
    if (trailing_norm) m.at(i, j++) = points[i].norm2();
  }
  return m;
}

std::size_t distinct_count(std::span<const LatticePoint> points) {
  std::set<LatticePoint> s(points.begin(), points.end());
  return s.size();
}

}  // namespace

std::size_t integer_matrix_rank(const IntegerMatrix& m) {
  IntegerMatrix w = m;
  int sign = 1;
  return bareiss_eliminate(w, sign);
}

BigInt integer_determinant(const IntegerMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows == 0) return 1;
  IntegerMatrix w = m;
  int sign = 1;
  // A rank-deficient matrix leaves a zero pivot; Bareiss with column skipping then
  // reports rank < rows.
  if (bareiss_eliminate(w, sign) < m.rows) return 0;
  return sign * w.at(m.rows - 1, m.cols - 1);
}

std::size_t common_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const std::size_t d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw std::invalid_argument("dimension mismatch");
  if (d == 0) throw std::invalid_argument("points must have dimension >= 1");
  return d;
}

std::size_t affine_rank(std::span<const LatticePoint> points) {
  const std::size_t d = common_dimension(points);
  if (points.size() == 1) return 0;
  IntegerMatrix m(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) m.at(i - 1, k) = big_from_i64(points[i][k] - points[0][k]);
  return integer_matrix_rank(m);
}

LatticePoint lift(const LatticePoint& p) {
  LatticePoint out = p;
  const BigInt n2 = p.norm2();
  if (!n2.fits_slong_p()) throw std::overflow_error("lift: squared norm exceeds coordinate range");
  out.coords.push_back(n2.get_si());
  return out;
}

bool conspheric_or_coflat(std::span<const LatticePoint> points) {
  const std::size_t d = common_dimension(points);
  if (points.size() != d + 2) throw std::invalid_argument("conspheric_or_coflat: expected d+2 points");
  return integer_determinant(point_rows(points, true, true)) == 0;
}

std::optional<SphereKey> circumsphere(std::span<const LatticePoint> points) {
  const std::size_t d = common_dimension(points);
  if (points.size() != d + 1) throw std::invalid_argument("circumsphere: expected d+1 points");
  const std::size_t u = d + 1;  // unknowns c_1..c_d, s
  // Rows of [2 x_i | -1 | |x_i|^2].
  std::vector<std::vector<Rational>> a(u, std::vector<Rational>(u + 1));
  for (std::size_t i = 0; i < u; ++i) {
    for (std::size_t k = 0; k < d; ++k) a[i][k] = Rational(2 * big_from_i64(points[i][k]));
    a[i][d] = -1;
    a[i][u] = Rational(points[i].norm2());
  }
  for (std::size_t c = 0; c < u; ++c) {
    std::size_t p = c;
    while (p < u && a[p][c] == 0) ++p;
    if (p == u) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < u; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= u; ++j) a[i][j] -= f * a[c][j];
    }
  }
  SphereKey key;
  key.center.resize(d);
  Rational c2 = 0;
  for (std::size_t k = 0; k < d; ++k) {
    key.center[k] = a[k][u] / a[k][k];
    c2 += key.center[k] * key.center[k];
  }
  const Rational s = a[d][u] / a[d][d];
  key.r2 = c2 - s;
  return key;
}

bool conspheric_strict(std::span<const LatticePoint> points) {
  const std::size_t d = common_dimension(points);
  if (distinct_count(points) < 2) throw std::invalid_argument("underdetermined");
  // 2 c.x_i - s = |x_i|^2 is consistent iff rank(A) = rank([A|b]). Any solution has
  // r2 = |x_i - c|^2 for every i, which is positive once two points differ.
  IntegerMatrix aug(points.size(), d + 2);
  IntegerMatrix a(points.size(), d + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      aug.at(i, k) = 2 * big_from_i64(points[i][k]);
      a.at(i, k) = aug.at(i, k);
    }
    aug.at(i, d) = -1;
    a.at(i, d) = -1;
    aug.at(i, d + 1) = points[i].norm2();
  }
  return integer_matrix_rank(a) == integer_matrix_rank(aug);
}

LineKey perpendicular_bisector(const LatticePoint& p, const LatticePoint& q) {
  if (p.dim() != 2 || q.dim() != 2) throw std::invalid_argument("perpendicular_bisector: planar points required");
  if (p == q) throw std::invalid_argument("degenerate pair");
  return LineKey::make(2 * (q[0] - p[0]), 2 * (q[1] - p[1]),
                       q[0] * q[0] + q[1] * q[1] - p[0] * p[0] - p[1] * p[1]);
}

bool is_isosceles_trapezoid(std::span<const LatticePoint> points) {
  if (points.size() != 4) throw std::invalid_argument("is_isosceles_trapezoid: expected 4 points");
  if (common_dimension(points) != 2) throw std::invalid_argument("is_isosceles_trapezoid: planar points required");
  if (distinct_count(points) != 4) throw std::invalid_argument("points not distinct");
  if (affine_rank(points) < 2) return false;
  static constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pr : kPairings) {
    if (perpendicular_bisector(points[pr[0]], points[pr[1]]) ==
        perpendicular_bisector(points[pr[2]], points[pr[3]]))
      return true;
  }
  return false;
}

bool alpha_nondegenerate_sphere(std::span<const LatticePoint> points, std::size_t k,
                                const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (k < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  if (points.size() < 2 || distinct_count(points) != points.size() || !conspheric_strict(points))
    throw std::invalid_argument("input not on a common sphere");
  const std::size_t total = points.size();
  // Any k points lie on some (k-1)-sphere, so that many is always attainable.
  std::size_t best = std::min(k, total);
  const std::size_t s = k + 1;
  if (s <= total) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<LatticePoint> subset(s);
    while (true) {
      for (std::size_t i = 0; i < s; ++i) subset[i] = points[idx[i]];
      if (affine_rank(subset) == k) {
        std::size_t on = 0;
        std::vector<LatticePoint> ext = subset;
        ext.emplace_back();
        for (const auto& x : points) {
          ext.back() = x;
          if (affine_rank(ext) == k && conspheric_strict(ext)) ++on;
        }
        best = std::max(best, on);
      }
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == total - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return Rational(static_cast<unsigned long>(best)) <= alpha * Rational(static_cast<unsigned long>(total));
}

}  // namespace latdeg
