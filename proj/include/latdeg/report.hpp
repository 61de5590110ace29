#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "latdeg/asymptotics.hpp"
#include "latdeg/constructions.hpp"
#include "latdeg/counting.hpp"

namespace latdeg {

using Json = nlohmann::json;

enum class OutputFormat { Json, Csv, Text };

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& text);

/// Everything needed to reproduce a run. Parameters are kept as the strings the user gave,
/// completed with defaults by `normalized()`.
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> params;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Json;
  bool timings = false;

  Json to_json() const;
  static RunConfig from_json(const Json& j);
};

enum class RunStatus { Ok, WitnessFound };

struct Report {
  RunConfig config;
  Json results = Json::array();
  std::string tool_version;
  std::int64_t wall_ms = 0;
  RunStatus status = RunStatus::Ok;
};

std::string tool_version();

/// Fills every parameter the subcommand reads with its default and rejects unknown ones.
RunConfig normalized(const RunConfig& config);

/// Executes the configured subcommand. Throws std::invalid_argument for bad parameters and
/// BudgetExceeded when a guard trips.
Report run(const RunConfig& config);

/// Serialized report. JSON is canonical: sorted keys, compact, big integers as decimal
/// strings, timing fields only when the config asks for them.
std::string render_report(const Report& report, OutputFormat format);
/// Writes to `path`, or stdout when empty.
void emit_report(const Report& report, OutputFormat format, const std::optional<std::string>& path);

Json count_to_json(const CountResult& r, bool timings = false);
CountResult count_from_json(const Json& j);
Json interval_to_json(const CertifiedInterval& iv);
Json construction_to_json(const ConstructionResult& c, bool timings = false);
Json witness_to_json(const Witness& w);
Json gamma_certificate_to_json(const GammaCertificate& cert);

}  // namespace latdeg
