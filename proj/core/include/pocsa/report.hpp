#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pocsa/config.hpp"
#include "pocsa/run_record.hpp"
#include "pocsa/statistics.hpp"

namespace pocsa {

/// Three significant digits in scientific notation, e.g. "8.56E-02".
std::string format_sci(double value);

/// One aggregated campaign row as it appears in summary and table CSVs.
struct SummaryRow {
  int function = 1;
  std::size_t dim = 0;
  std::size_t optimizers = 0;
  std::string algorithm;
  std::uint64_t budget_per_optimizer = 0;
  std::size_t runs = 0;
  Summary summary;
  std::uint64_t seed = 0;
};

SummaryRow make_summary_row(const CampaignConfig& config, const Summary& summary);

extern const char* const kSummaryHeader;

void write_summary_header(std::ostream& out);
// Row text without the trailing newline.
std::string format_summary_row(const SummaryRow& row);
void write_summary_row(std::ostream& out, const SummaryRow& row);

/// Long-form trace: iteration, best_energy, t_ac, sigma2, t_gen_ref and, when
/// recorded, t_gen_member_0..m-1. The first line is a '#' comment carrying the
/// configuration and run seed.
void write_trace_csv(std::ostream& out, const RunTrace& trace,
                     const CampaignConfig& config, std::uint64_t run_seed);
RunTrace read_trace_csv(std::istream& in);

/// Reads a campaign manifest.json and recomputes its summary from the raw
/// per-run finals.
SummaryRow read_manifest_row(const std::filesystem::path& manifest);

/// Finds manifest.json under each input (a file or a directory, searched
/// recursively), sorted for a stable table order.
std::vector<std::filesystem::path> collect_manifests(
    const std::vector<std::filesystem::path>& inputs);

/// Writes header plus one row per manifest. Throws ConfigError when no
/// manifest is found.
void write_report(std::ostream& out, const std::vector<std::filesystem::path>& manifests);

}  // namespace pocsa
