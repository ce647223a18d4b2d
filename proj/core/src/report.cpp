#include "pocsa/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pocsa/errors.hpp"

namespace pocsa {

const char* const kSummaryHeader =
    "function,D,m,algorithm,budget_per_optimizer,runs,mean,median,min,max,stddev,seed";

std::string format_sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2E", value);
  return buf;
}

SummaryRow make_summary_row(const CampaignConfig& c, const Summary& summary) {
  SummaryRow row;
  row.function = c.function;
  row.dim = c.dim;
  row.optimizers = c.effective_optimizers();
  row.algorithm = std::string(to_string(c.algorithm));
  row.budget_per_optimizer = c.budget_per_optimizer;
  row.runs = c.runs;
  row.summary = summary;
  row.seed = c.seed;
  return row;
}

void write_summary_header(std::ostream& out) { out << kSummaryHeader << '\n'; }

std::string format_summary_row(const SummaryRow& row) {
  std::ostringstream out;
  out << 'f' << row.function << ',' << row.dim << ',' << row.optimizers << ','
      << row.algorithm << ',' << row.budget_per_optimizer << ',' << row.runs << ','
      << format_sci(row.summary.mean) << ',' << format_sci(row.summary.median) << ','
      << format_sci(row.summary.min) << ',' << format_sci(row.summary.max) << ','
      << format_sci(row.summary.stddev) << ',' << row.seed;
  return out.str();
}

void write_summary_row(std::ostream& out, const SummaryRow& row) {
  out << format_summary_row(row) << '\n';
}

void write_trace_csv(std::ostream& out, const RunTrace& trace,
                     const CampaignConfig& config, std::uint64_t run_seed) {
  out << "# run_seed=" << run_seed;
  for (const auto& [key, value] : config_entries(config)) {
    // Execution details; traces must not depend on them.
    if (key == "out_dir" || key == "threads") continue;
    out << ' ' << key << '=' << value;
  }
  out << '\n';
  const bool members = !trace.t_gen_members.empty();
  out << "iteration,best_energy,t_ac,sigma2,t_gen_ref";
  if (members) {
    for (std::size_t i = 0; i < trace.t_gen_members.front().size(); ++i)
      out << ",t_gen_member_" << i;
  }
  out << '\n';
  for (std::size_t k = 0; k < trace.rows(); ++k) {
    out << k << ',' << format_double(trace.best_energy[k]) << ','
        << format_double(trace.t_ac[k]) << ',' << format_double(trace.sigma2[k]) << ','
        << format_double(trace.t_gen_ref[k]);
    if (members) {
      for (double t : trace.t_gen_members[k]) out << ',' << format_double(t);
    }
    out << '\n';
  }
}

RunTrace read_trace_csv(std::istream& in) {
  RunTrace trace;
  std::string line;
  bool header_seen = false;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    if (!header_seen) {
      header_seen = true;
      columns = cells.size();
      if (columns < 5 || cells[1] != "best_energy")
        throw ConfigError("trace CSV: unexpected header '" + line + "'");
      continue;
    }
    if (cells.size() != columns) throw ConfigError("trace CSV: ragged row '" + line + "'");
    trace.best_energy.push_back(std::stod(cells[1]));
    trace.t_ac.push_back(std::stod(cells[2]));
    trace.sigma2.push_back(std::stod(cells[3]));
    trace.t_gen_ref.push_back(std::stod(cells[4]));
    if (columns > 5) {
      std::vector<double> temps;
      for (std::size_t i = 5; i < columns; ++i) temps.push_back(std::stod(cells[i]));
      trace.t_gen_members.push_back(std::move(temps));
    }
  }
  if (!header_seen) throw ConfigError("trace CSV: missing header");
  return trace;
}

SummaryRow read_manifest_row(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  CampaignConfig config;
  for (const auto& [key, value] : manifest.at("config").items()) {
    if (key == "out_dir") continue;
    set_config_value(config, key, value.get<std::string>());
  }
  std::vector<double> finals;
  for (const auto& run : manifest.at("runs")) finals.push_back(run.at("final_best_energy").get<double>());
  return make_summary_row(config, summarize(finals));
}

std::vector<std::filesystem::path> collect_manifests(
    const std::vector<std::filesystem::path>& inputs) {
  std::vector<std::filesystem::path> found;
  for (const auto& input : inputs) {
    if (std::filesystem::is_regular_file(input)) {
      found.push_back(input);
    } else if (std::filesystem::is_directory(input)) {
      for (const auto& entry : std::filesystem::recursive_directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().filename() == "manifest.json")
          found.push_back(entry.path());
      }
    } else {
      throw ConfigError("no such file or directory: " + input.string());
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

void write_report(std::ostream& out, const std::vector<std::filesystem::path>& manifests) {
  if (manifests.empty()) throw ConfigError("report: no manifest.json found in the inputs");
  write_summary_header(out);
  for (const auto& m : manifests) write_summary_row(out, read_manifest_row(m));
}

}  // namespace pocsa
