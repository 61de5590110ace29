#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "latdeg/counting.hpp"
#include "latdeg/parallel.hpp"

namespace latdeg {

namespace {

using Clock = std::chrono::steady_clock;
using u128 = unsigned __int128;

std::int64_t elapsed_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require_plane_n(std::int64_t n, std::int64_t min_n) {
  if (n < min_n) throw std::invalid_argument("n must be >= " + std::to_string(min_n));
  // Keeps every intermediate of the planar counters inside 64-bit arithmetic.
  if (n > 20000) throw std::invalid_argument("n too large for planar counters");
}

// Lines with primitive direction (u, v), u >= 1, v >= 1: point counts of every line
// meeting [n]^2 in at least min_points points, accumulated into hist.
void sweep_direction(std::int64_t n, std::int64_t u, std::int64_t v, std::size_t min_points,
                     std::vector<std::uint64_t>& hist, std::uint64_t weight) {
  // First points of their line: p - (u, v) leaves the grid, i.e. px <= u or py <= v.
  for (std::int64_t px = 1; px <= n; ++px) {
    const std::int64_t py_hi = px <= u ? n : std::min(v, n);
    for (std::int64_t py = 1; py <= py_hi; ++py) {
      const auto m = static_cast<std::size_t>(1 + std::min((n - px) / u, (n - py) / v));
      if (m >= min_points) hist[m] += weight;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> collinear_line_histogram(std::int64_t n, std::size_t min_points) {
  require_plane_n(n, 1);
  min_points = std::max<std::size_t>(min_points, 2);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  if (static_cast<std::int64_t>(min_points) > n) return hist;
  // horizontal and vertical
  hist[static_cast<std::size_t>(n)] += 2 * static_cast<std::uint64_t>(n);
  // (u, v) and its mirror (u, -v) carry the same histogram.
  const std::int64_t reach = (n - 1) / static_cast<std::int64_t>(min_points - 1);
  for (std::int64_t u = 1; u <= reach; ++u)
    for (std::int64_t v = 1; v <= reach; ++v)
      if (std::gcd(u, v) == 1) sweep_direction(n, u, v, min_points, hist, 2);
  return hist;
}

CountResult count_collinear_fast(std::int64_t n, std::size_t r) {
  if (r < 3) throw std::invalid_argument("count_collinear_fast requires r >= 3");
  require_plane_n(n, 1);
  const auto start = Clock::now();
  const auto hist = collinear_line_histogram(n, r);
  BigInt total = 0;
  for (std::size_t m = r; m < hist.size(); ++m)
    if (hist[m]) total += BigInt(static_cast<unsigned long>(hist[m])) * falling_factorial(m, static_cast<unsigned>(r));
  return {n, 2, ConfigFamily::affine(1, r), total, CountMethod::DirectionSweep, elapsed_since(start)};
}

std::uint64_t collinear_symmetric_quadruples(std::uint64_t m) {
  // Pairs {i, i'} with i < i' grouped by i + i' = j; two pairs with the same j are
  // symmetric about j/2.
  std::uint64_t total = 0;
  if (m < 4) return 0;
  for (std::uint64_t j = 1; j + 1 < 2 * m; ++j) {
    const std::uint64_t lo = j >= m ? j - (m - 1) : 0;
    const std::uint64_t hi = (j + 1) / 2;  // exclusive bound on i
    if (hi <= lo) continue;
    const std::uint64_t c = hi - lo;
    total += c * (c - 1) / 2;
  }
  return total;
}

CountResult count_isosceles_trapezia(std::int64_t n) {
  require_plane_n(n, 1);
  const auto start = Clock::now();
  ConfigFamily fam = ConfigFamily::conspheric();
  fam.mode = TupleMode::Unordered;
  if (n == 1) return {n, 2, fam, 0, CountMethod::BisectorHash, elapsed_since(start)};

  // (i) Pairs of point pairs sharing a perpendicular bisector. The bisector of {p, q}
  // with q - p = k (u, v), (u, v) primitive, is the line (u, v).x = s/2 where
  // s = (u, v).(p + q); pairs are bucketed by (u, v) and then by s.
  std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
  dirs.emplace_back(0, 1);
  for (std::int64_t u = 1; u <= n - 1; ++u)
    for (std::int64_t v = -(n - 1); v <= n - 1; ++v)
      if (std::gcd(u, std::llabs(v)) == 1) dirs.emplace_back(u, v);

  const std::size_t chunks = std::min<std::size_t>(dirs.size(), 64);
  std::vector<u128> axis_partial(chunks, 0);
  parallel_chunks(chunks, [&](std::size_t chunk) {
    std::vector<std::uint32_t> cnt(static_cast<std::size_t>(4 * n * n + 4), 0);
    std::vector<std::size_t> touched;
    u128 acc = 0;
    for (std::size_t di = chunk; di < dirs.size(); di += chunks) {
      const auto [u, v] = dirs[di];
      const std::int64_t smin = 2 * u + (v >= 0 ? 2 * v : 2 * n * v);
      for (std::int64_t k = 1; k * u <= n - 1 && k * std::llabs(v) <= n - 1; ++k) {
        const std::int64_t dx = k * u;
        const std::int64_t dy = k * v;
        const std::int64_t py_lo = std::max<std::int64_t>(1, 1 - dy);
        const std::int64_t py_hi = std::min<std::int64_t>(n, n - dy);
        for (std::int64_t px = 1; px + dx <= n; ++px) {
          std::int64_t s = u * (2 * px + dx) + v * (2 * py_lo + dy);
          for (std::int64_t py = py_lo; py <= py_hi; ++py, s += 2 * v) {
            const auto idx = static_cast<std::size_t>(s - smin);
            if (cnt[idx] == 0) touched.push_back(idx);
            acc += cnt[idx]++;
          }
        }
      }
      for (auto idx : touched) cnt[idx] = 0;
      touched.clear();
    }
    axis_partial[chunk] = acc;
  });
  u128 axis_pairs = 0;
  for (auto a : axis_partial) axis_pairs += a;

  // (ii) Collinear pairs of pairs sharing bisector and midpoint.
  u128 degenerate = 0;
  const auto hist = collinear_line_histogram(n, 4);
  for (std::size_t m = 4; m < hist.size(); ++m) degenerate += static_cast<u128>(hist[m]) * collinear_symmetric_quadruples(m);

  // (iii) Rectangles were seen on both of their axes: equal-length diagonals sharing a
  // midpoint determine exactly one rectangle.
  const std::size_t sx_count = static_cast<std::size_t>(2 * n - 1);
  std::vector<u128> rect_partial(sx_count, 0);
  parallel_chunks(sx_count, [&](std::size_t chunk) {
    const std::int64_t sx = static_cast<std::int64_t>(chunk) + 2;
    std::vector<std::uint32_t> cnt(static_cast<std::size_t>(2 * (n - 1) * (n - 1) + 1), 0);
    std::vector<std::size_t> touched;
    u128 acc = 0;
    const std::int64_t px_lo = std::max<std::int64_t>(1, sx - n);
    const std::int64_t px_hi = std::min<std::int64_t>(n, sx - 1);
    for (std::int64_t sy = 2; sy <= 2 * n; ++sy) {
      const std::int64_t py_lo = std::max<std::int64_t>(1, sy - n);
      const std::int64_t py_hi = std::min<std::int64_t>(n, sy - 1);
      for (std::int64_t px = px_lo; px <= px_hi && 2 * px <= sx; ++px) {
        const std::int64_t ex = sx - 2 * px;
        for (std::int64_t py = py_lo; py <= py_hi; ++py) {
          const std::int64_t ey = sy - 2 * py;
          // keep p < q = S - p lexicographically
          if (ex == 0 && ey <= 0) continue;
          const auto idx = static_cast<std::size_t>(ex * ex + ey * ey);
          if (cnt[idx] == 0) touched.push_back(idx);
          acc += cnt[idx]++;
        }
      }
      for (auto idx : touched) cnt[idx] = 0;
      touched.clear();
    }
    rect_partial[chunk] = acc;
  });
  u128 rectangles = 0;
  for (auto r : rect_partial) rectangles += r;

  const u128 total = axis_pairs - degenerate - rectangles;
  return {n, 2, fam, big_from_u128(total), CountMethod::BisectorHash, elapsed_since(start)};
}

namespace {

struct CenterKey {
  std::int64_t x, y, den;
  bool operator==(const CenterKey&) const = default;
};

struct CenterKeyHash {
  std::size_t operator()(const CenterKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.den) + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

CountResult count_cyclic_quadrilaterals(std::int64_t n, std::int64_t max_n) {
  require_plane_n(n, 1);
  if (n > max_n)
    throw BudgetExceeded("count_cyclic_quadrilaterals: n = " + std::to_string(n) +
                         " exceeds the triple-hash guard; use count_isosceles_trapezia or the translation-sweep counter");
  const auto start = Clock::now();
  const auto pts = grid_points(n, 2);
  const std::size_t total = pts.size();

  // Each anchor i hashes the circles through i and two later points by their centre
  // (relative to i). A circle with g points after i shows up C(g, 2) times, and
  // summing C(g, 3) over anchors gives C(m, 4) per circle.
  std::vector<BigInt> partial(total);
  parallel_chunks(total, [&](std::size_t i) {
    std::unordered_map<CenterKey, std::uint64_t, CenterKeyHash> buckets;
    const Coord ax = pts[i][0], ay = pts[i][1];
    for (std::size_t j = i + 1; j < total; ++j) {
      const std::int64_t ux = pts[j][0] - ax, uy = pts[j][1] - ay;
      const std::int64_t uu = ux * ux + uy * uy;
      for (std::size_t k = j + 1; k < total; ++k) {
        const std::int64_t vx = pts[k][0] - ax, vy = pts[k][1] - ay;
        const std::int64_t det = ux * vy - uy * vx;
        if (det == 0) continue;
        const std::int64_t vv = vx * vx + vy * vy;
        std::int64_t x = vy * uu - uy * vv;
        std::int64_t y = ux * vv - vx * uu;
        std::int64_t den = 2 * det;
        if (den < 0) {
          x = -x;
          y = -y;
          den = -den;
        }
        const std::int64_t g = std::gcd(std::gcd(x, y), den);
        ++buckets[{x / g, y / g, den / g}];
      }
    }
    BigInt acc = 0;
    for (const auto& [key, c] : buckets) {
      const auto inv = invert_binomial(BigInt(static_cast<unsigned long>(c)), 2);
      if (!inv.exact) throw InternalError("circle bucket multiplicity " + std::to_string(c) + " is not C(m, 2)");
      acc += binomial(inv.m, 3);
    }
    partial[i] = acc;
  });
  BigInt count = 0;
  for (const auto& p : partial) count += p;
  ConfigFamily fam = ConfigFamily::conspheric();
  fam.mode = TupleMode::Unordered;
  return {n, 2, fam, count, CountMethod::TripleCircleHash, elapsed_since(start)};
}

CountResult count_cyclic_quadrilaterals_translation(std::int64_t n) {
  require_plane_n(n, 1);
  const auto start = Clock::now();
  // Offsets w of the other three points relative to the lexicographically smallest one:
  // 0 <= wx <= n-1, |wy| <= n-1, w > 0 lexicographically; sorted lexicographically.
  struct Offset {
    std::int64_t x, y;
  };
  std::vector<Offset> offs;
  for (std::int64_t x = 0; x <= n - 1; ++x)
    for (std::int64_t y = -(n - 1); y <= n - 1; ++y)
      if (x > 0 || y > 0) offs.push_back({x, y});
  const std::size_t total = offs.size();

  // For each v, the circles through 0 and v are indexed by the position of their centre
  // v/2 + t v_perp on the bisector; t = (|w|^2 - v.w) / (2 det(v, w)). Points w > v with
  // equal t lie on one circle; every pair of them completes a quadruple {0, v, w1, w2}
  // whose translation count inside [n]^2 is (n - width)(n - height).
  const std::size_t chunks = std::min<std::size_t>(total, 256);
  std::vector<u128> partial(chunks, 0);
  parallel_chunks(chunks, [&](std::size_t chunk) {
    struct Entry {
      std::int64_t num, den;
      std::uint32_t w;
    };
    std::vector<Entry> entries;
    u128 acc = 0;
    for (std::size_t i = chunk; i < total; i += chunks) {
      const Offset v = offs[i];
      entries.clear();
      for (std::size_t j = i + 1; j < total; ++j) {
        const Offset w = offs[j];
        const std::int64_t ylo = std::min<std::int64_t>({0, v.y, w.y});
        const std::int64_t yhi = std::max<std::int64_t>({0, v.y, w.y});
        if (yhi - ylo > n - 1) continue;
        const std::int64_t det = v.x * w.y - v.y * w.x;
        if (det == 0) continue;
        std::int64_t num = w.x * w.x + w.y * w.y - (v.x * w.x + v.y * w.y);
        std::int64_t den = 2 * det;
        if (den < 0) {
          num = -num;
          den = -den;
        }
        entries.push_back({num, den, static_cast<std::uint32_t>(j)});
      }
      const auto less = [](const Entry& a, const Entry& b) {
        const __int128 l = static_cast<__int128>(a.num) * b.den;
        const __int128 r = static_cast<__int128>(b.num) * a.den;
        return l < r || (l == r && a.w < b.w);
      };
      const auto same = [](const Entry& a, const Entry& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
      };
      std::sort(entries.begin(), entries.end(), less);
      for (std::size_t s = 0; s < entries.size();) {
        std::size_t e = s + 1;
        while (e < entries.size() && same(entries[s], entries[e])) ++e;
        for (std::size_t a = s; a < e; ++a) {
          const Offset w1 = offs[entries[a].w];
          for (std::size_t b = a + 1; b < e; ++b) {
            const Offset w2 = offs[entries[b].w];
            const std::int64_t width = std::max({v.x, w1.x, w2.x});
            const std::int64_t height = std::max<std::int64_t>({0, v.y, w1.y, w2.y}) -
                                        std::min<std::int64_t>({0, v.y, w1.y, w2.y});
            if (width < n && height < n) acc += static_cast<u128>((n - width) * (n - height));
          }
        }
        s = e;
      }
    }
    partial[chunk] = acc;
  });
  u128 count = 0;
  for (auto p : partial) count += p;
  ConfigFamily fam = ConfigFamily::conspheric();
  fam.mode = TupleMode::Unordered;
  return {n, 2, fam, big_from_u128(count), CountMethod::TranslationSweep, elapsed_since(start)};
}

BigInt forbidden_quadruple_count(std::int64_t n) {
  const BigInt cyclic = count_cyclic_quadrilaterals_translation(n).count;
  const BigInt collinear = n >= 2 ? count_collinear_fast(n, 4).count / 24 : BigInt(0);
  return cyclic + collinear;
}

}  // namespace latdeg
