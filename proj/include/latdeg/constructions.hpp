#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latdeg/bigint.hpp"
#include "latdeg/family.hpp"
#include "latdeg/geometry.hpp"

namespace latdeg {

/// Largest prime in [lo, hi]; throws when there is none.
std::int64_t prime_in_range(std::int64_t lo, std::int64_t hi);

enum class BaselineKind { MomentCurve, Parabola, Paraboloid };

std::string to_string(BaselineKind k);
BaselineKind parse_baseline_kind(const std::string& text);

struct Baseline {
  BaselineKind kind = BaselineKind::MomentCurve;
  std::int64_t n = 0;
  std::size_t d = 0;
  std::int64_t p = 0;
  ConfigFamily family;  // the family the raw set is checked against
  std::vector<LatticePoint> points;
  bool verified = false;
};

/// Modular moment curve t -> (t, t^2, ..., t^d) mod p, parabola t -> (t, t^2 mod p), or
/// paraboloid (x, y) -> (x, y, x^2 + y^2 mod p), with p the largest prime in [ceil(n/2), n]
/// and residues shifted into [1, p]. `d` is only read for the moment curve.
Baseline generate_baseline(BaselineKind kind, std::int64_t n, std::size_t d = 2);

/// A tuple of points satisfying the family's degeneracy predicate, sorted lexicographically.
struct Witness {
  std::vector<LatticePoint> tuple;
  ConfigFamily family;

  bool operator==(const Witness&) const = default;
};

/// Iteration cap on the r-subset enumeration inside point sets.
inline constexpr double kDefaultWitnessBudget = 2e9;

/// Every degenerate r-subset of `points`, each sorted, in lexicographic order. The circle
/// family groups triples by circumcircle or carrier line; other families enumerate subsets.
std::vector<Witness> all_witnesses(std::span<const LatticePoint> points, const ConfigFamily& family,
                                   double budget = kDefaultWitnessBudget);

/// The lexicographically smallest witness, or nothing when `points` avoids the family.
std::optional<Witness> verify_independent(std::span<const LatticePoint> points, const ConfigFamily& family);

/// Removes points one at a time (most witnesses first, ties to the lexicographically
/// largest) until no witness is left. Output is sorted.
std::vector<LatticePoint> greedy_repair(std::span<const LatticePoint> points, const ConfigFamily& family);

enum class DeletionPolicy { LexLargest, MaxDegree };

std::string to_string(DeletionPolicy p);
DeletionPolicy parse_deletion_policy(const std::string& text);

struct TrialSummary {
  std::uint64_t trial = 0;
  std::size_t sample_size = 0;
  std::size_t witnesses = 0;
  std::size_t deletions = 0;
  std::size_t size = 0;
  bool verified = false;

  bool operator==(const TrialSummary&) const = default;
};

struct ConstructionResult {
  std::vector<LatticePoint> points;  // sorted
  std::int64_t n = 0;
  std::size_t d = 0;
  ConfigFamily family;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t best_trial = 0;
  std::size_t size = 0;
  bool verified = false;
  DeletionPolicy policy = DeletionPolicy::LexLargest;
  Rational edge_estimate;          // E_ref, unordered edges
  bool edge_estimate_heuristic = false;
  std::uint64_t sample_threshold = 0;  // point kept iff a raw 64-bit draw is below it
  bool sample_all = false;             // p* clamped to 1
  std::optional<Rational> spencer_reference;
  std::vector<TrialSummary> trial_summaries;

  bool operator==(const ConstructionResult&) const = default;
};

struct EdgeEstimate {
  Rational edges;
  bool heuristic = false;
};

/// Analytic estimate of the number of degenerate r-subsets of [n]^d.
EdgeEstimate edge_estimate(std::int64_t n, std::size_t d, const ConfigFamily& family);

/// Randomized deletion: sample every grid point with p* = (V / (r E))^(1/(r-1)), delete one
/// point per surviving degenerate subset, verify, keep the best verified trial.
/// `edges` overrides the analytic E.
ConstructionResult deletion_construct(std::int64_t n, std::size_t d, const ConfigFamily& family, std::uint64_t seed,
                                      std::uint64_t trials, DeletionPolicy policy = DeletionPolicy::LexLargest,
                                      std::optional<Rational> edges = std::nullopt);

/// Parsed point-set file.
struct PointSetFile {
  std::size_t d = 0;
  std::int64_t n = 0;
  std::string family;
  std::uint64_t seed = 0;
  std::vector<LatticePoint> points;
};

/// "# latdeg v1 d=<d> n=<n> family=<id> seed=<seed>" then one sorted point per line.
std::string format_pointset(std::span<const LatticePoint> points, std::size_t d, std::int64_t n,
                            const std::string& family, std::uint64_t seed);
void write_pointset(const std::string& path, std::span<const LatticePoint> points, std::size_t d, std::int64_t n,
                    const std::string& family, std::uint64_t seed);
/// Header fields are optional; other '#' lines and blank lines are skipped.
PointSetFile parse_pointset(const std::string& text);
PointSetFile read_pointset(const std::string& path);

}  // namespace latdeg
