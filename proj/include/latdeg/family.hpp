#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "latdeg/geometry.hpp"

namespace latdeg {

enum class FamilyKind {
  AffineDegenerate,       // r points on a k-flat
  LinearDegenerate,       // r points on a k-dimensional linear subspace
  ConcyclicOrCollinear4,  // d = 2, r = 4; lines count as degenerate circles
  ConsphericTuple,        // r = d+2 points on a genuine sphere of positive radius
  ConsphericOrCoflat,     // r = d+2 points on a sphere or a hyperplane
};

enum class TupleMode { Ordered, Unordered };
enum class Multiplicity { Distinct, RepetitionAllowed };

/// A forbidden-configuration family together with its tuple-counting convention.
struct ConfigFamily {
  FamilyKind kind = FamilyKind::AffineDegenerate;
  std::size_t k = 0;  // flat dimension (affine / linear kinds only)
  std::size_t r = 0;  // tuple size; fixed by d for the spherical kinds
  TupleMode mode = TupleMode::Ordered;
  Multiplicity multiplicity = Multiplicity::Distinct;

  static ConfigFamily affine(std::size_t k, std::size_t r);
  static ConfigFamily linear(std::size_t k, std::size_t r);
  static ConfigFamily concyclic_or_collinear4();
  static ConfigFamily conspheric();
  static ConfigFamily conspheric_or_coflat();

  /// Tuple size in dimension d.
  std::size_t arity(std::size_t d) const;
  /// Throws std::invalid_argument naming the violated hypothesis.
  void validate(std::size_t d) const;

  /// Canonical id, e.g. "affine-1-3", "concyclic-or-collinear-4", "conspheric".
  std::string id() const;
  /// Accepts canonical ids plus the aliases "collinear-<r>" and "concyclic".
  static ConfigFamily parse(const std::string& id);

  /// Exact degeneracy test for one tuple of the family's arity.
  bool is_degenerate(std::span<const LatticePoint> tuple) const;

  bool operator==(const ConfigFamily&) const = default;
};

std::string to_string(TupleMode m);
std::string to_string(Multiplicity m);
/// "ordered-distinct", "unordered-repetition", ...
std::string mode_id(TupleMode m, Multiplicity mult);
void parse_mode_id(const std::string& text, TupleMode& m, Multiplicity& mult);

}  // namespace latdeg
