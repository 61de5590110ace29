#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latdeg/bigint.hpp"

namespace latdeg {

using Coord = std::int64_t;

/// Integer point of Z^d. Grid membership is checked by the operations that need it.
struct LatticePoint {
  std::vector<Coord> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<Coord> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }
  Coord& operator[](std::size_t i) { return coords[i]; }

  bool in_grid(Coord n) const;
  BigInt norm2() const;
  std::string to_string() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// All points of [n]^d in lexicographic order.
std::vector<LatticePoint> grid_points(Coord n, std::size_t d);

/// The line a x + b y = c with gcd(a,b,c) = 1 and (a > 0 or a = 0, b > 0).
struct LineKey {
  Coord a = 0;
  Coord b = 0;
  Coord c = 0;

  /// Normalizes any nonzero (a, b) triple into canonical form.
  static LineKey make(Coord a, Coord b, Coord c);
  bool contains(Coord x, Coord y) const { return a * x + b * y == c; }

  friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

/// Sphere with exact rational centre and squared radius. Components are always reduced,
/// so equal spheres give equal keys.
struct SphereKey {
  std::vector<Rational> center;
  Rational r2;

  bool operator==(const SphereKey& other) const;
  /// Canonical byte encoding of the reduced components, used as a hash key.
  std::string encode() const;
};

struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> entries;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  IntegerMatrix(std::size_t r, std::size_t c, std::vector<BigInt> e);

  BigInt& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t integer_matrix_rank(const IntegerMatrix& m);
/// Exact determinant of a square matrix by Bareiss elimination.
BigInt integer_determinant(const IntegerMatrix& m);

/// Dimension of the affine hull (0 for a single point).
std::size_t affine_rank(std::span<const LatticePoint> points);

/// Appends the squared norm as an extra coordinate.
LatticePoint lift(const LatticePoint& p);

/// d+2 points of R^d: true iff they lie on a common (d-1)-sphere or a common hyperplane.
bool conspheric_or_coflat(std::span<const LatticePoint> points);

/// Circumsphere of d+1 points in R^d; empty when the points are affinely dependent.
std::optional<SphereKey> circumsphere(std::span<const LatticePoint> points);

/// True iff some sphere of positive radius contains every point.
bool conspheric_strict(std::span<const LatticePoint> points);

LineKey perpendicular_bisector(const LatticePoint& p, const LatticePoint& q);

/// Four distinct planar points, not collinear, swapped pairwise by a reflection.
bool is_isosceles_trapezoid(std::span<const LatticePoint> points);

/// Every (k-1)-sphere through the given conspheric points holds at most alpha * |points|
/// of them. Brute force over (k+1)-subsets; intended for small inputs.
bool alpha_nondegenerate_sphere(std::span<const LatticePoint> points, std::size_t k,
                                const Rational& alpha);

/// Throws std::invalid_argument unless all points share one dimension; returns it.
std::size_t common_dimension(std::span<const LatticePoint> points);

}  // namespace latdeg
