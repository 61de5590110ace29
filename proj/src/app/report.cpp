#include "latdeg/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace latdeg {

namespace {

constexpr unsigned kDecimalDigits = 40;

Json points_to_json(std::span<const LatticePoint> pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p.coords);
  return out;
}

}  // namespace

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "";
}

OutputFormat parse_output_format(const std::string& text) {
  for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text})
    if (to_string(f) == text) return f;
  throw std::invalid_argument("unknown format: " + text);
}

std::string tool_version() { return LATDEG_VERSION; }

Json RunConfig::to_json() const {
  Json j;
  j["subcommand"] = subcommand;
  j["params"] = params;
  j["format"] = to_string(format);
  j["output_path"] = output_path ? Json(*output_path) : Json(nullptr);
  j["timings"] = timings;
  return j;
}

RunConfig RunConfig::from_json(const Json& j) {
  RunConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.params = j.at("params").get<std::map<std::string, std::string>>();
  c.format = parse_output_format(j.value("format", std::string("json")));
  if (j.contains("output_path") && !j["output_path"].is_null()) c.output_path = j["output_path"].get<std::string>();
  c.timings = j.value("timings", false);
  return c;
}

Json count_to_json(const CountResult& r, bool timings) {
  Json j;
  j["kind"] = "count";
  j["n"] = r.n;
  j["d"] = r.d;
  j["family"] = r.family.id();
  j["mode"] = to_string(r.family.mode);
  j["multiplicity"] = to_string(r.family.multiplicity);
  j["count"] = r.count.get_str();
  j["method"] = to_string(r.method);
  if (timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

CountResult count_from_json(const Json& j) {
  CountResult r;
  r.n = j.at("n").get<std::int64_t>();
  r.d = j.at("d").get<std::size_t>();
  r.family = ConfigFamily::parse(j.at("family").get<std::string>());
  r.family.mode = j.at("mode").get<std::string>() == "ordered" ? TupleMode::Ordered : TupleMode::Unordered;
  r.family.multiplicity =
      j.at("multiplicity").get<std::string>() == "distinct" ? Multiplicity::Distinct : Multiplicity::RepetitionAllowed;
  r.count = BigInt(j.at("count").get<std::string>());
  r.method = parse_count_method(j.at("method").get<std::string>());
  r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
  return r;
}

Json interval_to_json(const CertifiedInterval& iv) {
  Json j;
  j["kind"] = "interval";
  j["lo"] = to_decimal(iv.lo, kDecimalDigits);
  j["hi"] = to_decimal_up(iv.hi, kDecimalDigits);
  j["note"] = iv.note;
  return j;
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["family"] = w.family.id();
  j["tuple"] = points_to_json(w.tuple);
  return j;
}

Json construction_to_json(const ConstructionResult& c, bool) {
  Json j;
  j["kind"] = "construction";
  j["n"] = c.n;
  j["d"] = c.d;
  j["family"] = c.family.id();
  j["seed"] = std::to_string(c.seed);
  j["trials"] = c.trials;
  j["best_trial"] = c.best_trial;
  j["size"] = c.size;
  j["verified"] = c.verified;
  j["policy"] = to_string(c.policy);
  j["edge_estimate"] = to_fraction_string(c.edge_estimate);
  j["edge_estimate_heuristic"] = c.edge_estimate_heuristic;
  j["sample_threshold"] = std::to_string(c.sample_threshold);
  j["sample_all"] = c.sample_all;
  if (c.spencer_reference) {
    j["spencer_reference"] = to_fraction_string(*c.spencer_reference);
    j["spencer_reference_decimal"] = to_decimal(*c.spencer_reference, 6);
  } else {
    j["spencer_reference"] = nullptr;
  }
  Json trials = Json::array();
  for (const auto& t : c.trial_summaries) {
    Json tj;
    tj["trial"] = t.trial;
    tj["sample_size"] = t.sample_size;
    tj["witnesses"] = t.witnesses;
    tj["deletions"] = t.deletions;
    tj["size"] = t.size;
    tj["verified"] = t.verified;
    trials.push_back(tj);
  }
  j["trial_summaries"] = trials;
  j["points"] = points_to_json(c.points);
  return j;
}

Json gamma_certificate_to_json(const GammaCertificate& cert) {
  Json j;
  j["N"] = cert.N;
  j["frac_bits"] = cert.frac_bits;
  Json chunks = Json::array();
  std::uint64_t terms = 0, inexact = 0;
  for (const auto& ch : cert.chunks) {
    Json cj;
    cj["a_lo"] = ch.a_lo;
    cj["a_hi"] = ch.a_hi;
    cj["terms"] = ch.terms;
    cj["inexact_terms"] = ch.inexact_terms;
    cj["floor_sum"] = ch.floor_sum.get_str();
    chunks.push_back(cj);
    terms += ch.terms;
    inexact += ch.inexact_terms;
  }
  j["chunks"] = chunks;
  j["terms"] = terms;
  j["inexact_terms"] = inexact;
  j["s_lo"] = to_fraction_string(cert.s_lo);
  j["s_hi"] = to_fraction_string(cert.s_hi);
  j["rounding_budget"] = to_fraction_string(cert.rounding_budget);
  j["tail_bound"] = to_fraction_string(cert.tail_bound);
  j["interval"] = interval_to_json(cert.interval);
  j["interval"]["lo_exact"] = to_fraction_string(cert.interval.lo);
  j["interval"]["hi_exact"] = to_fraction_string(cert.interval.hi);
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void text_block(std::ostringstream& out, const Json& r, const std::string& indent) {
  for (const auto& [k, v] : r.items()) {
    if (k == "points" && v.is_array()) {
      out << indent << k << ": " << v.size() << " points\n";
    } else if (v.is_array()) {
      out << indent << k << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          text_block(out, e, indent + "    ");
        } else {
          out << indent << "  - " << scalar_text(e) << "\n";
        }
      }
    } else if (v.is_object()) {
      out << indent << k << ":\n";
      text_block(out, v, indent + "  ");
    } else {
      out << indent << k << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

std::string render_report(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["config"] = report.config.to_json();
      j["results"] = report.results;
      j["tool_version"] = report.tool_version;
      if (report.config.timings) j["wall_ms"] = report.wall_ms;
      return j.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "n,d,family,mode,multiplicity,count,method";
      if (report.config.timings) out << ",elapsed_ms";
      out << "\n";
      for (const auto& r : report.results) {
        if (r.value("kind", "") != "count") continue;
        out << r["n"].get<std::int64_t>() << "," << r["d"].get<std::size_t>() << ","
            << r["family"].get<std::string>() << "," << r["mode"].get<std::string>() << ","
            << r["multiplicity"].get<std::string>() << "," << r["count"].get<std::string>() << ","
            << r["method"].get<std::string>();
        if (report.config.timings) out << "," << r.value("elapsed_ms", std::int64_t{0});
        out << "\n";
      }
      return out.str();
    }
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "latdeg " << report.tool_version << " " << report.config.subcommand << "\n";
      for (const auto& [k, v] : report.config.params) out << "  --" << k << " " << v << "\n";
      if (report.results.empty()) out << "(no results)\n";
      for (const auto& r : report.results) {
        out << "result\n";
        text_block(out, r, "  ");
      }
      if (report.config.timings) out << "wall_ms: " << report.wall_ms << "\n";
      return out.str();
    }
  }
  return "";
}

void emit_report(const Report& report, OutputFormat format, const std::optional<std::string>& path) {
  const std::string text = render_report(report, format);
  if (!path || path->empty() || *path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw Error("cannot open " + *path + " for writing");
  f << text;
  if (!f) throw Error("write failed: " + *path);
}

}  // namespace latdeg
