#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "latdeg/report.hpp"

namespace latdeg {

namespace {

using Params = std::map<std::string, std::string>;

const std::map<std::string, Params>& subcommand_defaults() {
  // "" marks a required parameter.
  static const std::map<std::string, Params> defaults = {
      {"count", {{"n", ""}, {"d", "2"}, {"family", ""}, {"mode", "default"}, {"method", "auto"}, {"budget", "auto"}}},
      {"gamma", {{"N", "5500"}, {"certificate", "none"}}},
      {"construct",
       {{"n", ""},
        {"d", "2"},
        {"family", ""},
        {"seed", "1"},
        {"trials", "1"},
        {"policy", "lex-largest"},
        {"edges", "auto"},
        {"out", "none"}}},
      {"verify", {{"in", ""}, {"family", "from-file"}}},
      {"experiment",
       {{"preset", ""}, {"budget", "auto"}, {"seed", "1"}, {"trials", "auto"}, {"ns", "auto"}, {"N", "5500"}}},
  };
  return defaults;
}

const std::string& param(const RunConfig& c, const std::string& key) {
  const auto it = c.params.find(key);
  if (it == c.params.end()) throw std::invalid_argument("missing --" + key);
  return it->second;
}

std::int64_t parse_i64(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  std::int64_t out = 0;
  try {
    out = std::stoll(v, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument("--" + key + " expects an integer, got '" + v + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  std::uint64_t out = 0;
  try {
    if (!v.empty() && v[0] != '-') out = std::stoull(v, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument("--" + key + " expects a nonnegative integer, got '" + v + "'");
  return out;
}

double parse_budget(const std::string& v) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !(out > 0)) throw std::invalid_argument("--budget expects a positive number, got '" + v + "'");
  return out;
}

std::int64_t get_i64(const RunConfig& c, const std::string& key) { return parse_i64(key, param(c, key)); }

std::vector<std::int64_t> parse_list(const std::string& key, const std::string& v) {
  std::vector<std::int64_t> out;
  std::stringstream ss(v);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_i64(key, tok));
  if (out.empty()) throw std::invalid_argument("--" + key + " expects a comma-separated list");
  return out;
}

bool is_planar_circle_family(const ConfigFamily& f, std::size_t d) {
  return d == 2 && (f.kind == FamilyKind::ConcyclicOrCollinear4 || f.kind == FamilyKind::ConsphericOrCoflat);
}

// ---------------------------------------------------------------- count

Json run_count(const RunConfig& c) {
  const std::int64_t n = get_i64(c, "n");
  const auto d = static_cast<std::size_t>(get_i64(c, "d"));
  if (n < 1) throw std::invalid_argument("--n must be positive");
  if (d < 1) throw std::invalid_argument("--d must be positive");
  const std::string family_id = param(c, "family");
  const std::string budget_text = param(c, "budget");
  const bool auto_budget = budget_text == "auto";
  const double budget = auto_budget ? 0 : parse_budget(budget_text);
  std::string method = param(c, "method");

  if (family_id == "isosceles-trapezia") {
    if (d != 2) throw std::invalid_argument("isosceles-trapezia requires d = 2");
    if (method != "auto" && method != "bisector-hash")
      throw std::invalid_argument("isosceles-trapezia is counted by bisector-hash only");
    if (param(c, "mode") != "default" && param(c, "mode") != "unordered-distinct")
      throw std::invalid_argument("isosceles-trapezia counts unordered 4-subsets only");
    Json j = count_to_json(count_isosceles_trapezia(n), c.timings);
    j["family"] = "isosceles-trapezia";
    return j;
  }

  ConfigFamily family = ConfigFamily::parse(family_id);
  family.validate(d);
  if (param(c, "mode") != "default") parse_mode_id(param(c, "mode"), family.mode, family.multiplicity);
  const std::size_t r = family.arity(d);
  const bool distinct = family.multiplicity == Multiplicity::Distinct;

  if (method == "auto") {
    if (!distinct) method = "brute";
    else if (family.kind == FamilyKind::AffineDegenerate && family.k == 1 && d == 2 && family.r >= 3)
      method = "direction-sweep";
    else if (is_planar_circle_family(family, d) || (family.kind == FamilyKind::ConsphericTuple && d == 2))
      method = "translation-sweep";
    else if (family.kind == FamilyKind::ConsphericTuple)
      method = "circumsphere-hash";
    else
      method = "brute";
  }
  const CountMethod m = parse_count_method(method);
  if (m != CountMethod::Brute && !distinct)
    throw std::invalid_argument("method " + method + " counts distinct tuples only");

  // Fast counters report in their native mode; `unordered` is the unordered count.
  BigInt unordered;
  CountResult res;
  switch (m) {
    case CountMethod::Brute:
      res = count_bruteforce(n, d, family, auto_budget ? kDefaultBruteBudget : budget);
      return count_to_json(res, c.timings);
    case CountMethod::DirectionSweep:
      if (!(family.kind == FamilyKind::AffineDegenerate && family.k == 1 && d == 2 && family.r >= 3))
        throw std::invalid_argument("direction-sweep counts affine-1-r (r >= 3) in d = 2 only");
      res = count_collinear_fast(n, family.r);
      unordered = res.count / factorial(static_cast<unsigned>(r));
      break;
    case CountMethod::TripleCircleHash:
    case CountMethod::TranslationSweep: {
      const bool strict = family.kind == FamilyKind::ConsphericTuple && d == 2;
      if (!strict && !is_planar_circle_family(family, d))
        throw std::invalid_argument("method " + method + " counts planar circle families only");
      if (m == CountMethod::TripleCircleHash) {
        // budget caps the number of hashed triples C(n^2, 3)
        std::int64_t max_n = kDefaultCyclicTripleMaxN;
        if (!auto_budget) {
          max_n = 1;
          while (binomial(static_cast<std::uint64_t>((max_n + 1) * (max_n + 1)), 3) <= BigInt(budget)) ++max_n;
        }
        res = count_cyclic_quadrilaterals(n, max_n);
      } else {
        res = count_cyclic_quadrilaterals_translation(n);
      }
      unordered = res.count;
      if (!strict && n >= 2) unordered += count_collinear_fast(n, 4).count / 24;
      break;
    }
    case CountMethod::CircumsphereHash:
      if (family.kind != FamilyKind::ConsphericTuple)
        throw std::invalid_argument("circumsphere-hash counts the conspheric family only");
      res = count_conspheric_hash(n, d, auto_budget ? kDefaultSphereHashBudget : budget);
      unordered = res.count / factorial(static_cast<unsigned>(r));
      break;
    case CountMethod::BisectorHash:
      throw std::invalid_argument("bisector-hash counts --family isosceles-trapezia only");
  }
  res.n = n;
  res.d = d;
  res.family = family;
  res.method = m;
  res.count = family.mode == TupleMode::Ordered ? unordered * factorial(static_cast<unsigned>(r)) : unordered;
  return count_to_json(res, c.timings);
}

// ---------------------------------------------------------------- gamma

Json run_gamma(const RunConfig& c) {
  const std::int64_t N = get_i64(c, "N");
  const GammaCertificate cert = gamma_certificate(N);
  const std::string& path = param(c, "certificate");
  if (path != "none") {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << gamma_certificate_to_json(cert).dump(2) << "\n";
  }
  Json j = interval_to_json(cert.interval);
  j["N"] = N;
  j["lo_exact"] = to_fraction_string(cert.interval.lo);
  j["hi_exact"] = to_fraction_string(cert.interval.hi);
  j["terms"] = [&] {
    std::uint64_t t = 0;
    for (const auto& ch : cert.chunks) t += ch.terms;
    return t;
  }();
  return j;
}

// ---------------------------------------------------------------- construct

std::optional<Rational> resolve_edges(const std::string& text, std::int64_t n, std::size_t d,
                                      const ConfigFamily& family) {
  if (text == "auto") return std::nullopt;
  if (text == "exact") {
    if (!is_planar_circle_family(family, d))
      throw std::invalid_argument("--edges exact is available for concyclic-or-collinear-4 only");
    return Rational(forbidden_quadruple_count(n));
  }
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("--edges expects auto, exact or a rational, got '" + text + "'");
  }
}

Json run_construct(const RunConfig& c) {
  const std::int64_t n = get_i64(c, "n");
  const auto d = static_cast<std::size_t>(get_i64(c, "d"));
  if (d < 1) throw std::invalid_argument("--d must be positive");
  const ConfigFamily family = ConfigFamily::parse(param(c, "family"));
  const std::uint64_t seed = parse_u64("seed", param(c, "seed"));
  const std::uint64_t trials = parse_u64("trials", param(c, "trials"));
  const DeletionPolicy policy = parse_deletion_policy(param(c, "policy"));
  const auto edges = resolve_edges(param(c, "edges"), n, d, family);
  const ConstructionResult res = deletion_construct(n, d, family, seed, trials, policy, edges);
  const std::string& out = param(c, "out");
  if (out != "none") write_pointset(out, res.points, d, n, family.id(), seed);
  Json j = construction_to_json(res, c.timings);
  if (family.kind == FamilyKind::ConcyclicOrCollinear4) j["target_7n_over_12"] = (7 * n + 11) / 12;
  return j;
}

// ---------------------------------------------------------------- verify

Json run_verify(const RunConfig& c, RunStatus& status) {
  const PointSetFile file = read_pointset(param(c, "in"));
  std::string family_id = param(c, "family");
  if (family_id == "from-file") {
    if (file.family.empty()) throw std::invalid_argument("point-set file names no family; pass --family");
    family_id = file.family;
  }
  const ConfigFamily family = ConfigFamily::parse(family_id);
  Json j;
  j["kind"] = "verification";
  j["family"] = family.id();
  j["points"] = file.points.size();
  for (const auto& p : file.points)
    if (file.n > 0 && !p.in_grid(file.n)) throw std::invalid_argument("point " + p.to_string() + " outside [n]^d");
  const auto w = verify_independent(file.points, family);
  j["verified"] = !w.has_value();
  j["witness"] = w ? witness_to_json(*w) : Json(nullptr);
  if (w) status = RunStatus::WitnessFound;
  return j;
}

// ---------------------------------------------------------------- experiment

Json ratio_json(const Rational& q) {
  Json j;
  j["exact"] = to_fraction_string(q);
  j["decimal"] = to_decimal(q, 12);
  return j;
}

Rational pow_n(std::int64_t n, unsigned e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), e);
  return Rational(p);
}

void preset_s_table(const RunConfig& c, Json& results) {
  const std::string& b = param(c, "budget");
  const double budget = b == "auto" ? 2e5 : parse_budget(b);
  for (std::size_t d : {2, 3, 4}) {
    for (std::int64_t n = 2;; ++n) {
      const BigInt work = binomial(static_cast<std::uint64_t>(std::pow(n, d)), static_cast<unsigned>(d + 1));
      if (work > BigInt(budget)) break;
      results.push_back(count_to_json(count_conspheric_hash(n, d, budget), c.timings));
    }
  }
}

void preset_circle_deletion(const RunConfig& c, Json& results) {
  const std::string& ns_text = param(c, "ns");
  const auto ns = ns_text == "auto" ? std::vector<std::int64_t>{32, 64, 128} : parse_list("ns", ns_text);
  const std::string& tr = param(c, "trials");
  const std::uint64_t trials = tr == "auto" ? 20 : parse_u64("trials", tr);
  const std::uint64_t seed = parse_u64("seed", param(c, "seed"));
  const ConfigFamily family = ConfigFamily::concyclic_or_collinear4();
  for (auto n : ns) {
    const ConstructionResult res = deletion_construct(n, 2, family, seed, trials);
    Json j;
    j["kind"] = "circle-deletion";
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = std::to_string(seed);
    j["best_size"] = res.size;
    j["best_trial"] = res.best_trial;
    j["all_trials_verified"] = std::all_of(res.trial_summaries.begin(), res.trial_summaries.end(),
                                           [](const TrialSummary& t) { return t.verified; });
    j["spencer_reference_analytic"] = to_decimal(*res.spencer_reference, 6);
    j["target_7n_over_12"] = (7 * n + 11) / 12;
    // The exact edge count is affordable up to n = 64 on a desk machine.
    if (n <= 64) {
      const BigInt exact = forbidden_quadruple_count(n);
      const Rational s = spencer_bound(4, pow_n(n, 2), Rational(exact));
      j["edges_exact"] = exact.get_str();
      j["spencer_exact"] = to_decimal(s, 6);
      j["spencer_exact_floor"] = floor_of(s).get_str();
      j["meets_spencer_exact"] = BigInt(static_cast<unsigned long>(res.size)) >= floor_of(s);
    }
    j["points"] = construction_to_json(res)["points"];
    results.push_back(j);
  }
}

void preset_trapezoid_convergence(const RunConfig& c, Json& results) {
  const std::string& ns_text = param(c, "ns");
  const auto ns = ns_text == "auto" ? std::vector<std::int64_t>{16, 32, 64, 128} : parse_list("ns", ns_text);
  const CertifiedInterval gamma = gamma_interval(get_i64(c, "N"));
  const CertifiedInterval coll = collinear_leading_constant(4);
  Json g = interval_to_json(gamma);
  g["N"] = get_i64(c, "N");
  results.push_back(g);
  results.push_back(interval_to_json(coll));
  for (auto n : ns) {
    const Rational n5 = pow_n(n, 5);
    const BigInt t = count_isosceles_trapezia(n).count;
    const BigInt l = count_collinear_fast(n, 4).count;
    Json j;
    j["kind"] = "convergence";
    j["n"] = n;
    j["trapezia"] = t.get_str();
    j["trapezia_ratio"] = ratio_json(Rational(t) / n5);
    j["trapezia_gap_to_gamma_mid"] = ratio_json(abs(Rational(t) / n5 - gamma.midpoint()));
    j["collinear4_ordered"] = l.get_str();
    j["collinear4_ratio"] = ratio_json(Rational(l) / n5);
    j["collinear4_gap_to_constant_mid"] = ratio_json(abs(Rational(l) / n5 - coll.midpoint()));
    results.push_back(j);
  }
}

void preset_gamma_certify(const RunConfig& c, Json& results) {
  const std::int64_t N = get_i64(c, "N");
  const CertifiedInterval gamma = gamma_interval(N);
  Json g = interval_to_json(gamma);
  g["N"] = N;
  g["inside_0_35974_0_36017"] = gamma.lo > parse_rational("0.35974") && gamma.hi < parse_rational("0.36017");
  results.push_back(g);
  const CertifiedInterval density = forbidden_quadruple_density();
  Json dj = interval_to_json(density);
  dj["hi_at_most_0_51983"] = density.hi <= parse_rational("0.51983");
  results.push_back(dj);
}

Json run_experiment(const RunConfig& c) {
  const std::string& preset = param(c, "preset");
  Json results = Json::array();
  if (preset == "s-table") preset_s_table(c, results);
  else if (preset == "gamma-certify") preset_gamma_certify(c, results);
  else if (preset == "circle-deletion") preset_circle_deletion(c, results);
  else if (preset == "trapezoid-convergence") preset_trapezoid_convergence(c, results);
  else throw std::invalid_argument("unknown preset: " + preset);
  return results;
}

}  // namespace

RunConfig normalized(const RunConfig& config) {
  const auto& all = subcommand_defaults();
  const auto it = all.find(config.subcommand);
  if (it == all.end()) throw std::invalid_argument("unknown subcommand: " + config.subcommand);
  RunConfig out = config;
  for (const auto& [k, v] : config.params)
    if (!it->second.count(k)) throw std::invalid_argument("unknown flag --" + k + " for " + config.subcommand);
  for (const auto& [k, v] : it->second) {
    if (out.params.count(k)) continue;
    if (v.empty()) throw std::invalid_argument("missing --" + k);
    out.params[k] = v;
  }
  return out;
}

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.config = normalized(config);
  report.tool_version = tool_version();
  const RunConfig& c = report.config;
  if (c.subcommand == "count") report.results.push_back(run_count(c));
  else if (c.subcommand == "gamma") report.results.push_back(run_gamma(c));
  else if (c.subcommand == "construct") report.results.push_back(run_construct(c));
  else if (c.subcommand == "verify") report.results.push_back(run_verify(c, report.status));
  else if (c.subcommand == "experiment") report.results = run_experiment(c);
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace latdeg
