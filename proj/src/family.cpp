#include "latdeg/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latdeg {

ConfigFamily ConfigFamily::affine(std::size_t k, std::size_t r) {
  return {FamilyKind::AffineDegenerate, k, r, TupleMode::Ordered, Multiplicity::Distinct};
}

ConfigFamily ConfigFamily::linear(std::size_t k, std::size_t r) {
  return {FamilyKind::LinearDegenerate, k, r, TupleMode::Ordered, Multiplicity::RepetitionAllowed};
}

ConfigFamily ConfigFamily::concyclic_or_collinear4() {
  return {FamilyKind::ConcyclicOrCollinear4, 0, 4, TupleMode::Unordered, Multiplicity::Distinct};
}

ConfigFamily ConfigFamily::conspheric() {
  return {FamilyKind::ConsphericTuple, 0, 0, TupleMode::Ordered, Multiplicity::Distinct};
}

ConfigFamily ConfigFamily::conspheric_or_coflat() {
  return {FamilyKind::ConsphericOrCoflat, 0, 0, TupleMode::Ordered, Multiplicity::Distinct};
}

std::size_t ConfigFamily::arity(std::size_t d) const {
  switch (kind) {
    case FamilyKind::AffineDegenerate:
    case FamilyKind::LinearDegenerate:
      return r;
    case FamilyKind::ConcyclicOrCollinear4:
      return 4;
    case FamilyKind::ConsphericTuple:
    case FamilyKind::ConsphericOrCoflat:
      return d + 2;
  }
  return 0;
}

void ConfigFamily::validate(std::size_t d) const {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  switch (kind) {
    case FamilyKind::AffineDegenerate:
      if (!(k < d)) throw std::invalid_argument("affine family requires k < d");
      if (!(r >= k + 2)) throw std::invalid_argument("affine family requires r >= k + 2");
      break;
    case FamilyKind::LinearDegenerate:
      if (k < 1) throw std::invalid_argument("linear family requires k >= 1");
      if (!(k < std::min(d, r))) throw std::invalid_argument("linear family requires k < min(d, r)");
      break;
    case FamilyKind::ConcyclicOrCollinear4:
      if (d != 2) throw std::invalid_argument("concyclic-or-collinear-4 requires d = 2");
      break;
    case FamilyKind::ConsphericTuple:
    case FamilyKind::ConsphericOrCoflat:
      break;
  }
}

std::string ConfigFamily::id() const {
  switch (kind) {
    case FamilyKind::AffineDegenerate:
      return "affine-" + std::to_string(k) + "-" + std::to_string(r);
    case FamilyKind::LinearDegenerate:
      return "linear-" + std::to_string(k) + "-" + std::to_string(r);
    case FamilyKind::ConcyclicOrCollinear4:
      return "concyclic-or-collinear-4";
    case FamilyKind::ConsphericTuple:
      return "conspheric";
    case FamilyKind::ConsphericOrCoflat:
      return "conspheric-or-coflat";
  }
  return "";
}

namespace {

std::size_t parse_size(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("unknown family: " + whole);
  return std::stoul(s);
}

}  // namespace

ConfigFamily ConfigFamily::parse(const std::string& id) {
  if (id == "concyclic-or-collinear-4") return concyclic_or_collinear4();
  if (id == "conspheric" || id == "concyclic") return conspheric();
  if (id == "conspheric-or-coflat") return conspheric_or_coflat();
  if (id.rfind("collinear-", 0) == 0) return affine(1, parse_size(id.substr(10), id));
  for (const std::string prefix : {"affine-", "linear-"}) {
    if (id.rfind(prefix, 0) != 0) continue;
    const std::string rest = id.substr(prefix.size());
    const auto dash = rest.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("unknown family: " + id);
    const std::size_t k = parse_size(rest.substr(0, dash), id);
    const std::size_t r = parse_size(rest.substr(dash + 1), id);
    return prefix == "affine-" ? affine(k, r) : linear(k, r);
  }
  throw std::invalid_argument("unknown family: " + id);
}

bool ConfigFamily::is_degenerate(std::span<const LatticePoint> tuple) const {
  const std::size_t d = common_dimension(tuple);
  if (tuple.size() != arity(d)) throw std::invalid_argument("tuple size does not match family arity");
  switch (kind) {
    case FamilyKind::AffineDegenerate:
      return affine_rank(tuple) <= k;
    case FamilyKind::LinearDegenerate: {
      IntegerMatrix m(d, tuple.size());
      for (std::size_t j = 0; j < tuple.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = big_from_i64(tuple[j][i]);
      return integer_matrix_rank(m) <= k;
    }
    case FamilyKind::ConcyclicOrCollinear4:
    case FamilyKind::ConsphericOrCoflat:
      return latdeg::conspheric_or_coflat(tuple);
    case FamilyKind::ConsphericTuple: {
      // A tuple with a single distinct point sits on every sphere through it.
      std::set<LatticePoint> distinct(tuple.begin(), tuple.end());
      if (distinct.size() < 2) return true;
      return conspheric_strict(tuple);
    }
  }
  return false;
}

std::string to_string(TupleMode m) { return m == TupleMode::Ordered ? "ordered" : "unordered"; }

std::string to_string(Multiplicity m) {
  return m == Multiplicity::Distinct ? "distinct" : "repetition-allowed";
}

std::string mode_id(TupleMode m, Multiplicity mult) {
  return to_string(m) + (mult == Multiplicity::Distinct ? "-distinct" : "-repetition");
}

void parse_mode_id(const std::string& text, TupleMode& m, Multiplicity& mult) {
  if (text == "ordered-distinct") {
    m = TupleMode::Ordered;
    mult = Multiplicity::Distinct;
  } else if (text == "ordered-repetition") {
    m = TupleMode::Ordered;
    mult = Multiplicity::RepetitionAllowed;
  } else if (text == "unordered-distinct") {
    m = TupleMode::Unordered;
    mult = Multiplicity::Distinct;
  } else if (text == "unordered-repetition") {
    m = TupleMode::Unordered;
    mult = Multiplicity::RepetitionAllowed;
  } else {
    throw std::invalid_argument("unknown mode: " + text);
  }
}

}  // namespace latdeg
