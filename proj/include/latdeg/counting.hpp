#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latdeg/bigint.hpp"
#include "latdeg/family.hpp"
#include "latdeg/geometry.hpp"

namespace latdeg {

enum class CountMethod {
  Brute,
  DirectionSweep,
  TripleCircleHash,
  BisectorHash,
  CircumsphereHash,
  TranslationSweep,
};

std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& text);

/// An exact count of one configuration family in [n]^d.
struct CountResult {
  std::int64_t n = 0;
  std::size_t d = 0;
  ConfigFamily family;
  BigInt count;
  CountMethod method = CountMethod::Brute;
  std::int64_t elapsed_ms = 0;

  bool operator==(const CountResult&) const = default;
};

/// Lattice points of [n]^d bucketed by squared distance to a centre.
struct Census {
  LatticePoint center;
  std::map<std::uint64_t, std::uint64_t> buckets;
};

inline constexpr double kDefaultBruteBudget = 1e10;
inline constexpr double kDefaultSphereHashBudget = 1e8;
inline constexpr std::int64_t kDefaultCyclicTripleMaxN = 32;

/// Tuples (per the family's mode and multiplicity) drawn from `points` that satisfy the
/// family predicate. Enumerates multisets and weights each by its number of orderings.
BigInt count_tuples(std::span<const LatticePoint> points, const ConfigFamily& family);

/// Ground-truth enumeration over [n]^d. The guard compares n^(d r) against `budget`.
CountResult count_bruteforce(std::int64_t n, std::size_t d, const ConfigFamily& family,
                             double budget = kDefaultBruteBudget);

/// hist[m] = number of lines meeting [n]^2 in exactly m points, for m >= min_points.
std::vector<std::uint64_t> collinear_line_histogram(std::int64_t n, std::size_t min_points);

/// Ordered r-tuples of distinct collinear points in [n]^2 via the primitive-direction sweep.
CountResult count_collinear_fast(std::int64_t n, std::size_t r);

/// Unordered 4-subsets of [n]^2 on a genuine circle, by circumcircle hashing of triples.
CountResult count_cyclic_quadrilaterals(std::int64_t n, std::int64_t max_n = kDefaultCyclicTripleMaxN);

/// Same count, enumerating translation classes of concyclic quadruples anchored at their
/// lexicographically smallest point; O(n^4 log n), practical well past n = 64.
CountResult count_cyclic_quadrilaterals_translation(std::int64_t n);

/// Unordered 4-subsets of [n]^2 forming proper isosceles trapezia (rectangles once).
CountResult count_isosceles_trapezia(std::int64_t n);

/// Ordered (d+2)-tuples of distinct points of [n]^d on a genuine sphere, grouped by
/// spherical span. The guard compares C(n^d, d+1) against `budget`.
CountResult count_conspheric_hash(std::int64_t n, std::size_t d, double budget = kDefaultSphereHashBudget);

/// Unordered concyclic-or-collinear quadruples of [n]^2: the edge count of the
/// no-four-on-a-circle hypergraph.
BigInt forbidden_quadruple_count(std::int64_t n);

Census concentric_sphere_census(std::int64_t n, std::size_t d, const LatticePoint& center);

/// Number of collinear 4-subsets of a line with m lattice points that are symmetric about
/// a common midpoint (the degenerate trapezia on that line).
std::uint64_t collinear_symmetric_quadruples(std::uint64_t m);

}  // namespace latdeg
