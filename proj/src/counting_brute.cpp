#include <chrono>
#include <cmath>
#include <stdexcept>

#include "latdeg/counting.hpp"

namespace latdeg {

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Brute: return "brute";
    case CountMethod::DirectionSweep: return "direction-sweep";
    case CountMethod::TripleCircleHash: return "triple-circle-hash";
    case CountMethod::BisectorHash: return "bisector-hash";
    case CountMethod::CircumsphereHash: return "circumsphere-hash";
    case CountMethod::TranslationSweep: return "translation-sweep";
  }
  return "";
}

CountMethod parse_count_method(const std::string& text) {
  for (CountMethod m : {CountMethod::Brute, CountMethod::DirectionSweep, CountMethod::TripleCircleHash,
                        CountMethod::BisectorHash, CountMethod::CircumsphereHash, CountMethod::TranslationSweep})
    if (to_string(m) == text) return m;
  throw std::invalid_argument("unknown method: " + text);
}

BigInt count_tuples(std::span<const LatticePoint> points, const ConfigFamily& family) {
  if (points.empty()) return 0;
  const std::size_t d = common_dimension(points);
  family.validate(d);
  const std::size_t r = family.arity(d);
  const std::size_t total = points.size();
  const bool distinct = family.multiplicity == Multiplicity::Distinct;
  const bool ordered = family.mode == TupleMode::Ordered;
  if (distinct && r > total) return 0;

  const BigInt r_fact = factorial(static_cast<unsigned>(r));
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = distinct ? i : 0;
  std::vector<LatticePoint> tuple(r);
  BigInt count = 0;
  while (true) {
    for (std::size_t i = 0; i < r; ++i) tuple[i] = points[idx[i]];
    if (family.is_degenerate(tuple)) {
      if (!ordered) {
        count += 1;
      } else if (distinct) {
        count += r_fact;
      } else {
        // r! / prod(mult!) orderings of this multiset
        BigInt w = r_fact;
        std::size_t run = 1;
        for (std::size_t i = 1; i <= r; ++i) {
          if (i < r && idx[i] == idx[i - 1]) {
            ++run;
          } else {
            w /= factorial(static_cast<unsigned>(run));
            run = 1;
          }
        }
        count += w;
      }
    }
    // next multiset / combination in lexicographic order
    std::size_t i = r;
    if (distinct) {
      while (i > 0 && idx[i - 1] == total - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    } else {
      while (i > 0 && idx[i - 1] == total - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[i - 1];
    }
  }
  return count;
}

CountResult count_bruteforce(std::int64_t n, std::size_t d, const ConfigFamily& family, double budget) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  family.validate(d);
  const auto start = std::chrono::steady_clock::now();
  const double estimate = std::pow(static_cast<double>(n), static_cast<double>(d * family.arity(d)));
  if (estimate > budget) throw BudgetExceeded("instance too large for brute force");
  const auto points = grid_points(n, d);
  CountResult res{n, d, family, count_tuples(points, family), CountMethod::Brute, 0};
  res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return res;
}

Census concentric_sphere_census(std::int64_t n, std::size_t d, const LatticePoint& center) {
  if (center.dim() != d) throw std::invalid_argument("dimension mismatch");
  if (!center.in_grid(n)) throw std::invalid_argument("center outside grid");
  Census census{center, {}};
  std::vector<Coord> cur(d, 1);
  while (true) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const auto diff = static_cast<std::uint64_t>(std::llabs(cur[i] - center[i]));
      m += diff * diff;
    }
    ++census.buckets[m];
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == n) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return census;
}

}  // namespace latdeg
