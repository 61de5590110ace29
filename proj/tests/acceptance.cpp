// Acceptance run: one PASS/FAIL line per criterion, every tolerance fixed below.
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli_run.hpp"
#include "latdeg/report.hpp"
#include "mp.hpp"
#include "oracles.hpp"

using namespace latdeg;

namespace {

// ---- pinned tolerances and limits
const Rational kGammaLo = parse_rational("0.35974");
const Rational kGammaHi = parse_rational("0.36017");
const Rational kGammaMaxWidth = parse_rational("0.00043");
const Rational kDensityCap = parse_rational("0.51983");
constexpr std::int64_t kCorollaryN = 1000000;
const Rational kTrapeziumBand = parse_rational("0.1");
const Rational kCollinearBand = parse_rational("0.2");  // relative
constexpr std::uint64_t kDeletionTrials = 20;
constexpr std::uint64_t kDeletionSeed = 1;
constexpr int kEnclosureChoices = 50;
constexpr std::uint64_t kEnclosureSeed = 20261016;

// wall-clock limits in seconds
constexpr double kLimit1 = 60, kLimit2 = 5, kLimit3 = 600, kLimit4 = 300, kLimit5 = 300;
constexpr double kLimit6 = 900, kLimit7 = 1200, kLimit8 = 300, kLimit9 = 120, kLimit10 = 600;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string dec(const Rational& q, unsigned digits = 6) { return to_decimal(q, digits); }

Rational gap(const Rational& a, const Rational& b) { return abs(a - b); }

// ---- 1
void gamma_certification(Outcome& o) {
  const cli_run::Result r = cli_run::run("gamma --N 5500");
  o.require(r.code == 0, "gamma exit code");
  if (r.code != 0) return;
  const Json iv = Json::parse(r.out).at("results").at(0);
  const Rational lo = parse_rational(iv.at("lo").get<std::string>());
  const Rational hi = parse_rational(iv.at("hi").get<std::string>());
  o.detail << "lo=" << dec(lo, 8) << " hi=" << dec(hi, 8) << " width=" << dec(hi - lo, 8);
  o.require(kGammaLo < lo, "lo > 0.35974");
  o.require(lo <= hi, "lo <= hi");
  o.require(hi < kGammaHi, "hi < 0.36017");
  o.require(hi - lo <= kGammaMaxWidth, "width <= 4.3e-4");
}

// ---- 2
void density_constant(Outcome& o) {
  const CertifiedInterval c = forbidden_quadruple_density();
  const Rational n(kCorollaryN);
  const Rational s = spencer_bound(4, n * n, kDensityCap * n * n * n * n * n);
  const Rational target = Rational(7, 12) * n;
  o.detail << "density_hi=" << dec(c.hi, 8) << " spencer(n=1e6)=" << dec(s, 1) << " 7n/12=" << dec(target, 1);
  o.require(c.hi <= kDensityCap, "density hi <= 0.51983");
  o.require(s > target, "spencer bound > 7n/12");
}

// ---- 3
void circle_oracles(Outcome& o) {
  ConfigFamily strict = ConfigFamily::conspheric();
  strict.mode = TupleMode::Unordered;
  for (std::int64_t n = 1; n <= 8; ++n) {
    const BigInt cyc = count_cyclic_quadrilaterals(n).count;
    const BigInt trap = count_isosceles_trapezia(n).count;
    const std::uint64_t cyc_oracle = oracle::cyclic_quadrilaterals(n);
    const std::uint64_t trap_oracle = oracle::isosceles_trapezia(n);
    o.require(cyc == cyc_oracle, "cyclic n=" + std::to_string(n));
    o.require(count_cyclic_quadrilaterals_translation(n).count == cyc, "translation sweep n=" + std::to_string(n));
    o.require(trap == trap_oracle, "trapezia n=" + std::to_string(n));
    // the library's own brute force, for the same subsets
    o.require(cyc == count_bruteforce(n, 2, strict).count, "cyclic vs count_bruteforce n=" + std::to_string(n));
    std::uint64_t trap_pred = 0;
    const auto g = grid_points(n, 2);
    oracle::for_each_subset(g.size(), 4, [&](const std::vector<std::size_t>& s) {
      const std::vector<LatticePoint> t{g[s[0]], g[s[1]], g[s[2]], g[s[3]]};
      trap_pred += is_isosceles_trapezoid(t);
    });
    o.require(trap == trap_pred, "trapezia vs predicate n=" + std::to_string(n));
    if (n == 8) o.detail << "cyclic(8)=" << cyc << " trapezia(8)=" << trap;
  }
}

// ---- 4
void sphere_oracles(Outcome& o) {
  for (auto [n, d] : std::vector<std::pair<std::int64_t, std::size_t>>{{2, 3}, {3, 3}, {2, 4}}) {
    const BigInt hash = count_conspheric_hash(n, d).count;
    const BigInt brute = count_bruteforce(n, d, ConfigFamily::conspheric()).count;
    o.detail << "S(" << n << "," << d << ")=" << hash << " ";
    o.require(hash == brute, "hash vs brute at (" + std::to_string(n) + "," + std::to_string(d) + ")");
    if (n == 2 && d == 3) o.require(hash == 6720, "S(2,3) = 6720");
  }
}

// ---- 5
void flat_oracles(Outcome& o) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::size_t r = 3; r <= 5; ++r) {
      const BigInt fast = count_collinear_fast(n, r).count;
      o.require(fast == count_bruteforce(n, 2, ConfigFamily::affine(1, r)).count,
                "collinear fast vs brute n=" + std::to_string(n) + " r=" + std::to_string(r));
      o.require(fast == oracle::collinear_ordered(n, r),
                "collinear fast vs oracle n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  std::size_t checked = 0;
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for (std::size_t r = 2; r <= 4; ++r) {
          ConfigFamily a = ConfigFamily::affine(k, r), l = ConfigFamily::linear(k, r);
          bool a_ok = true, l_ok = true;
          try { a.validate(d); } catch (const std::invalid_argument&) { a_ok = false; }
          try { l.validate(d); } catch (const std::invalid_argument&) { l_ok = false; }
          if (!a_ok && !l_ok) continue;
          const auto ref = oracle::flat_tuples(n, d, k, r);
          const std::string tag = " n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" +
                                  std::to_string(k) + " r=" + std::to_string(r);
          if (a_ok) {
            o.require(count_bruteforce(n, d, a).count == ref.affine_distinct, "A distinct" + tag);
            a.multiplicity = Multiplicity::RepetitionAllowed;
            o.require(count_bruteforce(n, d, a).count == ref.affine_repetition, "A repetition" + tag);
            checked += 2;
          }
          if (l_ok) {
            o.require(count_bruteforce(n, d, l).count == ref.linear_repetition, "L repetition" + tag);
            l.multiplicity = Multiplicity::Distinct;
            o.require(count_bruteforce(n, d, l).count == ref.linear_distinct, "L distinct" + tag);
            checked += 2;
          }
        }
      }
    }
  }
  ConfigFamily l = ConfigFamily::linear(1, 2);
  l.multiplicity = Multiplicity::RepetitionAllowed;
  const BigInt l2 = count_bruteforce(2, 2, l).count;
  o.require(l2 == 6, "L(2,2,1,2) = 6");
  o.detail << "flat counts checked=" << checked << " L(2,2,1,2)=" << l2;
}

// ---- 6
void convergence(Outcome& o) {
  const CertifiedInterval gamma = gamma_interval(5500);
  const CertifiedInterval c4 = collinear_leading_constant(4);
  const Rational gmid = gamma.midpoint(), cmid = c4.midpoint();
  const auto n5 = [](std::int64_t n) { return Rational(BigInt(n) * n * n * n * n); };
  const Rational t32 = Rational(count_isosceles_trapezia(32).count) / n5(32);
  const Rational t128 = Rational(count_isosceles_trapezia(128).count) / n5(128);
  const Rational l32 = Rational(count_collinear_fast(32, 4).count) / n5(32);
  const Rational l128 = Rational(count_collinear_fast(128, 4).count) / n5(128);
  o.detail << "trapezia/n^5: n=32 " << dec(t32) << ", n=128 " << dec(t128) << " (gamma mid " << dec(gmid)
           << "); collinear4/n^5: n=32 " << dec(l32) << ", n=128 " << dec(l128) << " (constant mid " << dec(cmid)
           << ", rel gap " << dec(gap(l128, cmid) / cmid, 4) << ")";
  o.require(gamma.lo - kTrapeziumBand <= t128 && t128 <= gamma.hi + kTrapeziumBand, "trapezia ratio within 0.1");
  o.require(gap(t128, gmid) < gap(t32, gmid), "trapezia ratio improves from n=32");
  o.require(gap(l128, cmid) <= kCollinearBand * cmid, "collinear ratio within 20%");
  o.require(gap(l128, cmid) < gap(l32, cmid), "collinear ratio improves from n=32");
}

// ---- 7
void deletion_strength(Outcome& o) {
  for (std::int64_t n : {32, 64}) {
    const ConfigFamily f = ConfigFamily::concyclic_or_collinear4();
    const ConstructionResult r = deletion_construct(n, 2, f, kDeletionSeed, kDeletionTrials);
    bool all_verified = r.trial_summaries.size() == kDeletionTrials;
    for (const auto& t : r.trial_summaries) all_verified = all_verified && t.verified;
    o.require(all_verified, "every trial verified at n=" + std::to_string(n));
    o.require(!verify_independent(r.points, f).has_value(), "best set re-verifies at n=" + std::to_string(n));
    // independent determinant check of the best set
    bool oracle_ok = true;
    oracle::for_each_subset(r.points.size(), 4, [&](const std::vector<std::size_t>& s) {
      if (oracle_ok && oracle::sphere_or_flat({r.points[s[0]].coords, r.points[s[1]].coords, r.points[s[2]].coords,
                                               r.points[s[3]].coords}))
        oracle_ok = false;
    });
    o.require(oracle_ok, "best set passes determinant oracle at n=" + std::to_string(n));
    const BigInt edges = forbidden_quadruple_count(n);
    const BigInt floor_bound = floor_of(spencer_bound(4, Rational(n * n), Rational(edges)));
    const std::int64_t target = (7 * n + 11) / 12;
    o.require(BigInt(static_cast<unsigned long>(r.size)) >= floor_bound, "best >= spencer floor at n=" + std::to_string(n));
    o.detail << "n=" << n << ": best " << r.size << ", spencer floor " << floor_bound << " (E=" << edges
             << "), 7n/12 target " << target << (static_cast<std::int64_t>(r.size) >= target ? " met" : " not met")
             << "; ";
  }
}

// ---- 8
void baselines(Outcome& o) {
  for (std::int64_t n = 10; n <= 30; ++n) {
    const Baseline b = generate_baseline(BaselineKind::MomentCurve, n, 3);
    o.require(2 * b.points.size() >= static_cast<std::size_t>(n), "moment curve size at n=" + std::to_string(n));
    o.require(!verify_independent(b.points, ConfigFamily::affine(2, 4)).has_value(),
              "moment curve plane-free at n=" + std::to_string(n));
  }
  o.detail << "moment curve ok for n=10..30; ";
  for (std::int64_t n : {20, 40}) {
    const ConfigFamily f = ConfigFamily::concyclic_or_collinear4();
    const Baseline b = generate_baseline(BaselineKind::Parabola, n);
    const std::vector<LatticePoint> repaired = greedy_repair(b.points, f);
    o.require(!verify_independent(repaired, f).has_value(), "parabola repair verified at n=" + std::to_string(n));
    o.require(4 * repaired.size() >= static_cast<std::size_t>(n), "parabola size >= n/4 at n=" + std::to_string(n));
    o.detail << "parabola n=" << n << ": " << b.points.size() << " -> " << repaired.size() << "; ";
  }
}

// ---- 9
void enclosures(Outcome& o) {
  std::mt19937_64 rng(kEnclosureSeed);
  int zetas = 0, gammas = 0, checked = 0;
  for (int i = 0; i < kEnclosureChoices - 1; ++i) {
    if (i % 5 < 3) {
      const unsigned s = 2 + static_cast<unsigned>(rng() % 11);
      const std::uint64_t K = 1 + rng() % 5000;
      o.require(zeta_interval(s, K).contains(mp::zeta(s)),
                "zeta(" + std::to_string(s) + ") K=" + std::to_string(K));
      ++zetas;
    } else {
      const std::int64_t N = 2 + static_cast<std::int64_t>(rng() % 600);
      const Rational v = mp::gamma_partial(N);
      const CertifiedInterval iv = gamma_interval(N);
      o.require(iv.contains(v), "gamma partial N=" + std::to_string(N));
      ++gammas;
    }
    ++checked;
  }
  const Rational dv = mp::gamma_partial(5500) + mp::collinear_quadruple_density();
  const CertifiedInterval density = forbidden_quadruple_density();
  o.require(density.contains(dv), "density");
  ++checked;
  o.detail << "choices=" << checked << " (zeta " << zetas << ", gamma " << gammas << ", density 1)";
}

// ---- 10
void determinism(Outcome& o) {
  const auto pts = cli_run::scratch("acceptance_points.txt");
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"count --n 2 --d 3 --family conspheric --mode ordered-distinct", ""},
      {"count --n 5 --family collinear-4 --method brute", ""},
      {"count --n 64 --family isosceles-trapezia", ""},
      {"count --n 24 --family concyclic-or-collinear-4 --mode unordered-distinct", ""},
      {"gamma --N 5500", ""},
      {"construct --n 32 --family concyclic-or-collinear-4 --seed 1 --trials 20 --out " + pts.string(), ""},
      {"verify --in " + pts.string(), ""},
      {"experiment --preset s-table --budget 1e5", ""},
      {"experiment --preset trapezoid-convergence --ns 16,32", ""},
      {"experiment --preset circle-deletion --ns 32 --trials 5", ""},
  };
  std::size_t identical = 0;
  for (const auto& [args, env] : commands) {
    const cli_run::Result a = cli_run::run(args, env);
    const cli_run::Result b = cli_run::run(args, "LATDEG_THREADS=1");
    const bool same = a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out;
    o.require(same, args);
    identical += same;
  }
  const auto report = cli_run::scratch("acceptance_report.json");
  const bool wrote = cli_run::run("--out " + report.string() + " count --n 16 --family isosceles-trapezia").code == 0;
  const bool replayed = wrote && cli_run::run("replay --in " + report.string() + " --check").code == 0;
  o.require(replayed, "replay --check");
  std::filesystem::remove(pts);
  std::filesystem::remove(report);
  o.detail << identical << "/" << commands.size() << " commands byte-identical on rerun (default vs 1 thread), replay "
           << (replayed ? "identical" : "differs");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "gamma certification", kLimit1, gamma_certification},
      {2, "density constant", kLimit2, density_constant},
      {3, "oracle equivalence, circles", kLimit3, circle_oracles},
      {4, "oracle equivalence, spheres", kLimit4, sphere_oracles},
      {5, "oracle equivalence, flats", kLimit5, flat_oracles},
      {6, "asymptotic convergence", kLimit6, convergence},
      {7, "construction safety and strength", kLimit7, deletion_strength},
      {8, "baseline validity", kLimit8, baselines},
      {9, "certified arithmetic", kLimit9, enclosures},
      {10, "determinism", kLimit10, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(1);
    t << secs << "s of " << c.limit_s << "s";
    o.require(secs <= c.limit_s, "time limit");
    failed += !o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << t.str() << ")  " << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed;
}
