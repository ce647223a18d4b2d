// Command-line harness: run, sweep, report and trace subcommands.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pocsa/campaign.hpp"
#include "pocsa/config.hpp"
#include "pocsa/errors.hpp"
#include "pocsa/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitEvaluation = 3;

// Flag name -> config key. Flag values are kept as text and applied after the
// config file so that flags win.
const std::vector<std::pair<std::string, std::string>> kFlagKeys = {
    {"--algo", "algorithm"},
    {"--function", "function"},
    {"--dim", "dim"},
    {"--optimizers", "optimizers"},
    {"--budget", "budget_per_optimizer"},
    {"--runs", "runs"},
    {"--seed", "seed"},
    {"--rotation-seed", "rotation_seed"},
    {"--rotation-count", "rotation_count"},
    {"--out", "out_dir"},
    {"--threads", "threads"},
    {"--tgen0", "tgen0"},
    {"--tac0", "tac0"},
    {"--alpha", "alpha"},
    {"--beta", "beta"},
    {"--phi", "phi"},
    {"--mu", "mu"},
    {"--delta", "delta"},
};

struct CampaignFlags {
  std::map<std::string, std::string> values;
  std::string config_path;
  bool trace = false;
  bool trace_members = false;

  void attach(CLI::App& app) {
    for (const auto& [flag, key] : kFlagKeys) {
      app.add_option_function<std::string>(
          flag, [this, key = key](const std::string& v) { values[key] = v; },
          "sets config key '" + key + "'");
    }
    app.add_option("--config", config_path, "key=value config file; flags override it");
    app.add_flag("--trace", trace, "write trace_<run>.csv per run");
    app.add_flag("--trace-members", trace_members,
                 "include per-optimizer generation temperatures in traces");
  }

  pocsa::CampaignConfig build(pocsa::CampaignConfig config) const {
    if (!config_path.empty()) pocsa::apply_config_file(config, config_path);
    for (const auto& [key, value] : values) pocsa::set_config_value(config, key, value);
    if (trace) config.trace = true;
    if (trace_members) config.trace = config.trace_members = true;
    return config;
  }
};

void ensure_valid(const pocsa::CampaignConfig& config) {
  const auto errors = pocsa::validate(config);
  if (!errors.empty()) {
    std::string msg;
    for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
    throw pocsa::ConfigError(msg);
  }
}

void print_summary(const pocsa::CampaignConfig& config, const pocsa::Summary& summary) {
  pocsa::write_summary_header(std::cout);
  pocsa::write_summary_row(std::cout, pocsa::make_summary_row(config, summary));
}

int run_command(const CampaignFlags& flags, bool force_trace) {
  pocsa::CampaignConfig defaults;
  if (force_trace) defaults.runs = 1;
  pocsa::CampaignConfig config = flags.build(defaults);
  if (force_trace) config.trace = config.trace_members = true;
  ensure_valid(config);
  const auto result = pocsa::run_campaign(config);
  pocsa::write_campaign(result, config.out_dir);
  print_summary(config, result.summary);
  return 0;
}

int sweep_command(const CampaignFlags& flags) {
  pocsa::CampaignConfig defaults;
  defaults.algorithm = pocsa::Algorithm::b_csa;
  pocsa::CampaignConfig config = flags.build(defaults);
  ensure_valid(config);
  const auto result = pocsa::sweep_tgen(config);
  pocsa::write_sweep(result, config.out_dir);
  std::cout << pocsa::kSummaryHeader << ",tgen0,selected\n";
  for (std::size_t j = 0; j < result.members.size(); ++j) {
    const auto& m = result.members[j];
    std::cout << pocsa::format_summary_row(pocsa::make_summary_row(m.config, m.summary))
              << ',' << pocsa::format_double(*m.config.tgen0) << ','
              << (j == result.selected ? 1 : 0) << '\n';
  }
  return 0;
}

int report_command(const std::vector<std::string>& inputs, const std::string& out_path) {
  std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
  const auto manifests = pocsa::collect_manifests(paths);
  if (out_path.empty()) {
    pocsa::write_report(std::cout, manifests);
  } else {
    std::ostringstream buffer;
    pocsa::write_report(buffer, manifests);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw pocsa::ConfigError("cannot write " + out_path);
    out << buffer.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled simulated annealing (CSA, R-CSA, B-CSA, PO-CSA) experiment harness"};
  app.require_subcommand(1);

  CampaignFlags run_flags, sweep_flags, trace_flags;
  auto* run = app.add_subcommand("run", "run one campaign");
  run_flags.attach(*run);
  auto* sweep = app.add_subcommand("sweep", "B-CSA sweep over the seven initial generation temperatures");
  sweep_flags.attach(*sweep);
  auto* trace = app.add_subcommand("trace", "run with full per-iteration traces for plotting");
  trace_flags.attach(*trace);

  auto* report = app.add_subcommand("report", "aggregate manifests into a summary table");
  std::vector<std::string> report_inputs;
  std::string report_out;
  report->add_option("inputs", report_inputs, "manifest.json files or directories")->required();
  report->add_option("--out", report_out, "table CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(run_flags, false);
    if (*sweep) return sweep_command(sweep_flags);
    if (*trace) return run_command(trace_flags, true);
    if (*report) return report_command(report_inputs, report_out);
  } catch (const pocsa::ConfigError& e) {
    std::istringstream lines(e.what());
    for (std::string line; std::getline(lines, line);) std::cerr << "error: " << line << '\n';
    return kExitConfig;
  } catch (const pocsa::EvaluationError& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
