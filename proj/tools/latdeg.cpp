// latdeg: exact counts, certified constants and verified constructions for degenerate
// configurations in lattice cubes.
//
// Exit codes: 0 ok, 1 other failure, 2 witness found (verify), 3 budget exceeded, 4 bad flags.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latdeg/report.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitWitness = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadFlags = 4;

struct Sub {
  CLI::App* app;
  std::string name;
};

void add_params(CLI::App* sub, std::initializer_list<std::pair<const char*, const char*>> flags) {
  for (const auto& [name, help] : flags) sub->add_option(std::string("--") + name, help);
}

// Collects the options the user actually passed into params.
std::map<std::string, std::string> collect_params(CLI::App* sub) {
  std::map<std::string, std::string> out;
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_single_name() == "help") continue;
    out[opt->get_single_name()] = opt->as<std::string>();
  }
  return out;
}

int replay(const std::string& in, const std::optional<std::string>& out_path, bool check) {
  std::ifstream f(in, std::ios::binary);
  if (!f) throw latdeg::Error("cannot open " + in);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string original = ss.str();
  const latdeg::RunConfig config = latdeg::RunConfig::from_json(latdeg::Json::parse(original).at("config"));
  const latdeg::Report report = latdeg::run(config);
  const std::string text = latdeg::render_report(report, latdeg::OutputFormat::Json);
  if (check) {
    if (text != original) {
      std::cerr << "replay mismatch: " << in << "\n";
      return kExitError;
    }
    std::cerr << "replay identical: " << in << "\n";
  }
  latdeg::emit_report(report, latdeg::OutputFormat::Json, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latdeg: degenerate configurations in lattice cubes"};
  app.set_version_flag("--version", latdeg::tool_version());
  app.require_subcommand(1);
  std::string format = "json";
  std::string out;
  bool timings = false;
  app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out, "output path (default stdout)");
  app.add_flag("--timings", timings, "include elapsed times in the report");

  std::vector<Sub> subs;
  auto* count = app.add_subcommand("count", "exact count of one family in [n]^d");
  add_params(count, {{"n", "grid side"},
                     {"d", "dimension (default 2)"},
                     {"family", "affine-k-r | linear-k-r | collinear-r | concyclic-or-collinear-4 | conspheric | "
                                "conspheric-or-coflat | isosceles-trapezia"},
                     {"mode", "ordered-distinct | ordered-repetition | unordered-distinct | unordered-repetition"},
                     {"method", "auto | brute | direction-sweep | triple-circle-hash | translation-sweep | "
                                "bisector-hash | circumsphere-hash"},
                     {"budget", "iteration cap of the chosen method's guard"}});
  subs.push_back({count, "count"});

  auto* gamma = app.add_subcommand("gamma", "certified enclosure of the trapezium constant");
  add_params(gamma, {{"N", "truncation (default 5500)"}, {"certificate", "write the certificate JSON here"}});
  subs.push_back({gamma, "gamma"});

  auto* construct = app.add_subcommand("construct", "randomized deletion construction");
  add_params(construct, {{"n", "grid side"},
                         {"d", "dimension (default 2)"},
                         {"family", "family id"},
                         {"seed", "64-bit seed (default 1)"},
                         {"trials", "independent trials (default 1)"},
                         {"policy", "lex-largest | max-degree"},
                         {"edges", "auto | exact | explicit edge count"},
                         {"out", "write the best point set here"}});
  subs.push_back({construct, "construct"});

  auto* verify = app.add_subcommand("verify", "check a point-set file against a family");
  add_params(verify, {{"in", "point-set file"}, {"family", "family id (default: from the file header)"}});
  subs.push_back({verify, "verify"});

  auto* experiment = app.add_subcommand("experiment", "reproducible presets");
  add_params(experiment, {{"preset", "s-table | gamma-certify | circle-deletion | trapezoid-convergence"},
                          {"budget", "guard for s-table"},
                          {"seed", "seed for circle-deletion"},
                          {"trials", "trials for circle-deletion"},
                          {"ns", "comma-separated grid sides"},
                          {"N", "gamma truncation"}});
  subs.push_back({experiment, "experiment"});

  auto* replay_cmd = app.add_subcommand("replay", "re-run the config embedded in a JSON report");
  std::string replay_in;
  bool replay_check = false;
  replay_cmd->add_option("--in", replay_in, "report file")->required();
  replay_cmd->add_flag("--check", replay_check, "fail unless the new report is byte-identical");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadFlags;
  }

  const std::optional<std::string> out_path = out.empty() ? std::nullopt : std::optional<std::string>(out);
  try {
    if (replay_cmd->parsed()) return replay(replay_in, out_path, replay_check);
    latdeg::RunConfig config;
    for (const auto& s : subs) {
      if (!s.app->parsed()) continue;
      config.subcommand = s.name;
      config.params = collect_params(s.app);
    }
    config.format = latdeg::parse_output_format(format);
    config.output_path = out_path;
    config.timings = timings;
    const latdeg::Report report = latdeg::run(config);
    latdeg::emit_report(report, config.format, out_path);
    if (report.status == latdeg::RunStatus::WitnessFound) {
      std::cerr << "witness found\n";
      return kExitWitness;
    }
    return 0;
  } catch (const latdeg::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
