#include "latdeg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "latdeg/asymptotics.hpp"
#include "latdeg/counting.hpp"
#include "latdeg/parallel.hpp"

namespace latdeg {

std::int64_t prime_in_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 2 || lo > hi) throw std::invalid_argument("prime_in_range requires 2 <= lo <= hi");
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (std::int64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::int64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::int64_t x = hi; x >= lo; --x)
    if (!composite[x]) return x;
  throw std::invalid_argument("no prime in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string to_string(BaselineKind k) {
  switch (k) {
    case BaselineKind::MomentCurve: return "moment-curve";
    case BaselineKind::Parabola: return "parabola";
    case BaselineKind::Paraboloid: return "paraboloid";
  }
  return "";
}

BaselineKind parse_baseline_kind(const std::string& text) {
  for (BaselineKind k : {BaselineKind::MomentCurve, BaselineKind::Parabola, BaselineKind::Paraboloid})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown baseline: " + text);
}

Baseline generate_baseline(BaselineKind kind, std::int64_t n, std::size_t d) {
  if (n < 4) throw std::invalid_argument("baseline requires n >= 4");
  Baseline out;
  out.kind = kind;
  out.n = n;
  out.p = prime_in_range((n + 1) / 2, n);
  const std::int64_t p = out.p;
  switch (kind) {
    case BaselineKind::MomentCurve: {
      if (d < 2) throw std::invalid_argument("moment curve requires d >= 2");
      out.d = d;
      out.family = ConfigFamily::affine(d - 1, d + 1);
      for (std::int64_t t = 0; t < p; ++t) {
        std::vector<Coord> c(d);
        std::int64_t power = 1;
        for (std::size_t i = 0; i < d; ++i) {
          power = power * t % p;
          c[i] = power + 1;
        }
        out.points.emplace_back(std::move(c));
      }
      break;
    }
    case BaselineKind::Parabola:
      out.d = 2;
      out.family = ConfigFamily::concyclic_or_collinear4();
      for (std::int64_t t = 0; t < p; ++t) out.points.push_back({t + 1, t * t % p + 1});
      break;
    case BaselineKind::Paraboloid:
      out.d = 3;
      out.family = ConfigFamily::affine(1, 3);
      for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) out.points.push_back({x + 1, y + 1, (x * x + y * y) % p + 1});
      break;
  }
  std::sort(out.points.begin(), out.points.end());
  out.verified = !verify_independent(out.points, out.family).has_value();
  return out;
}

namespace {

using i128 = __int128;

// Members (indices into a sorted point list) of every line or circle holding >= min_size
// points; each set sorted.
using Buckets = std::vector<std::vector<std::size_t>>;

void add_subsets(const std::vector<std::size_t>& members, std::size_t r, const std::vector<LatticePoint>& pts,
                 const ConfigFamily& family, std::vector<Witness>& out) {
  const std::size_t m = members.size();
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Witness w{{}, family};
    for (auto i : idx) w.tuple.push_back(pts[members[i]]);
    out.push_back(std::move(w));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < r; ++k) idx[k] = idx[k - 1] + 1;
  }
}

// Lattice lines in any dimension, keyed by primitive direction (first nonzero entry
// positive) and the unique lattice point whose leading coordinate lies in [0, v_i0).
Buckets line_buckets(const std::vector<LatticePoint>& pts, std::size_t min_size) {
  std::map<std::vector<Coord>, std::set<std::size_t>> lines;
  const std::size_t d = pts.empty() ? 0 : pts[0].dim();
  std::vector<Coord> v(d), key(2 * d);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Coord g = 0;
      for (std::size_t c = 0; c < d; ++c) {
        v[c] = pts[j][c] - pts[i][c];
        g = std::gcd(g, v[c]);
      }
      std::size_t lead = 0;
      while (v[lead] == 0) ++lead;
      if (v[lead] < 0) g = -g;
      for (auto& x : v) x /= g;
      const Coord p = pts[i][lead];
      const Coord t = p >= 0 ? p / v[lead] : -((-p + v[lead] - 1) / v[lead]);
      for (std::size_t c = 0; c < d; ++c) {
        key[c] = v[c];
        key[d + c] = pts[i][c] - t * v[c];
      }
      auto& s = lines[key];
      s.insert(i);
      s.insert(j);
    }
  }
  Buckets out;
  for (auto& [k, s] : lines)
    if (s.size() >= min_size) out.emplace_back(s.begin(), s.end());
  return out;
}

// Circles through planar points, keyed by exact centre and squared radius.
Buckets circle_buckets(const std::vector<LatticePoint>& pts, std::size_t min_size) {
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, i128>, std::set<std::size_t>> circles;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::int64_t ax = pts[i][0], ay = pts[i][1];
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const std::int64_t ux = pts[j][0] - ax, uy = pts[j][1] - ay;
      const std::int64_t uu = ux * ux + uy * uy;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const std::int64_t vx = pts[k][0] - ax, vy = pts[k][1] - ay;
        std::int64_t den = 2 * (ux * vy - uy * vx);
        if (den == 0) continue;
        const std::int64_t vv = vx * vx + vy * vy;
        std::int64_t rx = vy * uu - uy * vv;
        std::int64_t ry = ux * vv - vx * uu;
        if (den < 0) {
          rx = -rx;
          ry = -ry;
          den = -den;
        }
        const std::int64_t g = std::gcd(std::gcd(rx, ry), den);
        rx /= g;
        ry /= g;
        den /= g;
        const i128 r2 = static_cast<i128>(rx) * rx + static_cast<i128>(ry) * ry;
        auto& s = circles[{rx + ax * den, ry + ay * den, den, r2}];
        s.insert(i);
        s.insert(j);
        s.insert(k);
      }
    }
  }
  Buckets out;
  for (auto& [k, s] : circles)
    if (s.size() >= min_size) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<Witness> collect(std::vector<LatticePoint> pts, const ConfigFamily& family, double budget,
                             bool first_only) {
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw std::invalid_argument("points not distinct");
  std::vector<Witness> out;
  if (pts.empty()) return out;
  const std::size_t d = common_dimension(pts);
  family.validate(d);
  const std::size_t r = family.arity(d);
  if (pts.size() < r) return out;

  const bool planar_circles = d == 2 && (family.kind == FamilyKind::ConcyclicOrCollinear4 ||
                                         family.kind == FamilyKind::ConsphericTuple ||
                                         family.kind == FamilyKind::ConsphericOrCoflat);
  const bool lines = family.kind == FamilyKind::AffineDegenerate && family.k == 1;
  if (planar_circles || lines) {
    Buckets buckets;
    if (planar_circles) buckets = circle_buckets(pts, r);
    if (lines || family.kind != FamilyKind::ConsphericTuple) {
      auto lb = line_buckets(pts, r);
      buckets.insert(buckets.end(), lb.begin(), lb.end());
    }
    if (first_only) {
      // a bucket's smallest subset is its first r members
      const std::vector<std::size_t>* best = nullptr;
      for (const auto& b : buckets)
        if (!best || std::lexicographical_compare(b.begin(), b.begin() + r, best->begin(), best->begin() + r))
          best = &b;
      if (best) add_subsets({best->begin(), best->begin() + r}, r, pts, family, out);
      return out;
    }
    for (const auto& b : buckets) add_subsets(b, r, pts, family, out);
    std::sort(out.begin(), out.end(), [](const Witness& a, const Witness& b) { return a.tuple < b.tuple; });
    return out;
  }

  if (binomial(pts.size(), static_cast<unsigned>(r)) > BigInt(budget))
    throw BudgetExceeded("too many subsets to check");
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<LatticePoint> tuple(r);
  const std::size_t m = pts.size();
  while (true) {
    for (std::size_t i = 0; i < r; ++i) tuple[i] = pts[idx[i]];
    if (family.is_degenerate(tuple)) {
      out.push_back({tuple, family});
      if (first_only) return out;
    }
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < r; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<Witness> all_witnesses(std::span<const LatticePoint> points, const ConfigFamily& family, double budget) {
  return collect({points.begin(), points.end()}, family, budget, false);
}

std::optional<Witness> verify_independent(std::span<const LatticePoint> points, const ConfigFamily& family) {
  auto ws = collect({points.begin(), points.end()}, family, kDefaultWitnessBudget, true);
  if (ws.empty()) return std::nullopt;
  return ws.front();
}

namespace {

// Removes points until no witness survives. Returns the removed points.
std::set<LatticePoint> delete_by_degree(const std::vector<Witness>& ws) {
  std::map<LatticePoint, std::vector<std::size_t>> incidence;
  for (std::size_t w = 0; w < ws.size(); ++w)
    for (const auto& p : ws[w].tuple) incidence[p].push_back(w);
  std::vector<bool> alive(ws.size(), true);
  std::map<LatticePoint, std::size_t> degree;
  for (const auto& [p, list] : incidence) degree[p] = list.size();
  std::set<LatticePoint> removed;
  while (true) {
    const LatticePoint* best = nullptr;
    std::size_t best_deg = 0;
    for (const auto& [p, deg] : degree)
      if (deg > 0 && deg >= best_deg) {
        best = &p;
        best_deg = deg;
      }
    if (!best) break;
    const LatticePoint victim = *best;
    removed.insert(victim);
    for (auto w : incidence[victim]) {
      if (!alive[w]) continue;
      alive[w] = false;
      for (const auto& q : ws[w].tuple) --degree[q];
    }
  }
  return removed;
}

}  // namespace

std::vector<LatticePoint> greedy_repair(std::span<const LatticePoint> points, const ConfigFamily& family) {
  std::vector<LatticePoint> cur(points.begin(), points.end());
  std::sort(cur.begin(), cur.end());
  while (true) {
    const auto ws = all_witnesses(cur, family);
    if (ws.empty()) return cur;
    std::map<LatticePoint, std::size_t> degree;
    for (const auto& w : ws)
      for (const auto& p : w.tuple) ++degree[p];
    auto best = degree.begin();
    for (auto it = degree.begin(); it != degree.end(); ++it)
      if (it->second >= best->second) best = it;
    cur.erase(std::find(cur.begin(), cur.end(), best->first));
  }
}

std::string to_string(DeletionPolicy p) { return p == DeletionPolicy::LexLargest ? "lex-largest" : "max-degree"; }

DeletionPolicy parse_deletion_policy(const std::string& text) {
  if (text == "lex-largest") return DeletionPolicy::LexLargest;
  if (text == "max-degree") return DeletionPolicy::MaxDegree;
  throw std::invalid_argument("unknown policy: " + text);
}

EdgeEstimate edge_estimate(std::int64_t n, std::size_t d, const ConfigFamily& family) {
  family.validate(d);
  const std::size_t r = family.arity(d);
  const Rational nn(n);
  const auto power = [&](std::size_t e) {
    Rational out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= nn;
    return out;
  };
  const Rational r_fact(factorial(static_cast<unsigned>(r)));
  const auto from_growth = [&](GrowthId id) {
    const GrowthValue g = predicted_growth({id, static_cast<std::int64_t>(d), static_cast<std::int64_t>(family.k),
                                            static_cast<std::int64_t>(family.r)},
                                           n);
    return EdgeEstimate{Rational(g.approx(n)) / r_fact, true};
  };
  switch (family.kind) {
    case FamilyKind::ConcyclicOrCollinear4:
      return {forbidden_quadruple_density().hi * power(5), false};
    case FamilyKind::ConsphericTuple:
    case FamilyKind::ConsphericOrCoflat:
      if (d == 2) {
        if (family.kind == FamilyKind::ConsphericOrCoflat) return {forbidden_quadruple_density().hi * power(5), false};
        return {gamma_interval(5500).hi * power(5), false};
      }
      if (d < 2) break;
      // lower-bound growth n^(d^2+d-2) of the conspheric count, used as a guess
      return {power(d * d + d - 2) / r_fact, true};
    case FamilyKind::AffineDegenerate:
      if (d == 2 && family.k == 1 && family.r > 3)
        return {collinear_leading_constant(static_cast<unsigned>(family.r)).hi * power(family.r + 1) / r_fact, false};
      return from_growth(GrowthId::AAffine);
    case FamilyKind::LinearDegenerate:
      return from_growth(GrowthId::LLinear);
  }
  throw std::invalid_argument("no edge estimate for family " + family.id() +
                              " in this dimension; pass an explicit edge count");
}

ConstructionResult deletion_construct(std::int64_t n, std::size_t d, const ConfigFamily& family, std::uint64_t seed,
                                      std::uint64_t trials, DeletionPolicy policy, std::optional<Rational> edges) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  family.validate(d);
  const std::size_t r = family.arity(d);

  ConstructionResult res;
  res.n = n;
  res.d = d;
  res.family = family;
  res.seed = seed;
  res.trials = trials;
  res.policy = policy;
  if (edges) {
    if (*edges <= 0) throw std::invalid_argument("edge count must be positive");
    res.edge_estimate = *edges;
  } else {
    const EdgeEstimate e = edge_estimate(n, d, family);
    res.edge_estimate = e.edges;
    res.edge_estimate_heuristic = e.heuristic;
  }
  Rational V = 1;
  for (std::size_t i = 0; i < d; ++i) V *= n;
  res.spencer_reference = spencer_bound(static_cast<unsigned>(r), V, res.edge_estimate);

  const Rational ratio = V / (Rational(static_cast<unsigned long>(r)) * res.edge_estimate);
  const double p_star = std::pow(ratio.get_d(), 1.0 / static_cast<double>(r - 1));
  if (!(p_star < 1.0)) {
    res.sample_all = true;
  } else {
    res.sample_threshold = static_cast<std::uint64_t>(std::ldexp(p_star, 64));
  }

  const auto grid = grid_points(n, d);
  std::vector<std::vector<LatticePoint>> kept(trials);
  res.trial_summaries.resize(trials);
  parallel_chunks(trials, [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<LatticePoint> sample;
    for (const auto& p : grid)
      if (res.sample_all || rng() < res.sample_threshold) sample.push_back(p);
    const auto ws = all_witnesses(sample, family);
    std::set<LatticePoint> removed;
    if (policy == DeletionPolicy::LexLargest) {
      for (const auto& w : ws) {
        const bool alive = std::none_of(w.tuple.begin(), w.tuple.end(),
                                        [&](const LatticePoint& p) { return removed.count(p) > 0; });
        if (alive) removed.insert(w.tuple.back());
      }
    } else {
      removed = delete_by_degree(ws);
    }
    std::vector<LatticePoint> out;
    for (const auto& p : sample)
      if (!removed.count(p)) out.push_back(p);
    TrialSummary& s = res.trial_summaries[t];
    s.trial = t;
    s.sample_size = sample.size();
    s.witnesses = ws.size();
    s.deletions = removed.size();
    s.size = out.size();
    s.verified = !verify_independent(out, family).has_value();
    kept[t] = std::move(out);
  });

  std::optional<std::size_t> best;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& s = res.trial_summaries[t];
    if (s.verified && (!best || s.size > res.trial_summaries[*best].size)) best = t;
  }
  res.verified = best.has_value();
  res.best_trial = best.value_or(0);
  res.points = kept[res.best_trial];
  res.size = res.points.size();
  return res;
}

}  // namespace latdeg
