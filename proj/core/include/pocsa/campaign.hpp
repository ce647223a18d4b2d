#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pocsa/benchmarks.hpp"
#include "pocsa/config.hpp"
#include "pocsa/run_record.hpp"
#include "pocsa/statistics.hpp"

namespace pocsa {

/// Seed of run `run_index`; independent of how many runs the campaign has.
std::uint64_t run_seed(std::uint64_t campaign_seed, std::size_t run_index) noexcept;

/// Benchmark of a campaign, including its shared rotation matrix.
bench::BenchmarkSpec campaign_benchmark(const CampaignConfig& config);

/// One run of the configured algorithm on `objective`.
RunRecord run_single(const CampaignConfig& config, const ObjectiveFunction& objective,
                     std::uint64_t seed);

struct CampaignResult {
  CampaignConfig config;
  std::string objective_name;
  std::optional<RotationMatrix> rotation;
  std::vector<RunRecord> runs;
  Summary summary;

  std::vector<double> finals() const;
};

/// Executes config.runs independent runs, config.threads at a time. Results
/// do not depend on the thread count. Throws ConfigError listing every
/// violation of an invalid config.
CampaignResult run_campaign(const CampaignConfig& config);

/// Writes manifest.json, summary.csv, trace_<run>.csv (when tracing) and
/// rotation_<fn>_<D>.txt (rotated functions) into `dir`.
void write_campaign(const CampaignResult& result, const std::filesystem::path& dir);

struct SweepResult {
  CampaignConfig config;
  std::vector<CampaignResult> members;  // one per kSweepTemperatures entry
  std::size_t selected = 0;             // argmin of the member means
};

/// Configuration of sweep member j: plain CSA at kSweepTemperatures[j] with
/// its own sub-seed and the parent's rotation matrix.
CampaignConfig sweep_member_config(const CampaignConfig& config, std::size_t j);

SweepResult sweep_tgen(const CampaignConfig& config);

/// Each member goes to dir/tgen_<value>/; dir gets sweep_manifest.json and
/// sweep_summary.csv with the selected member marked.
void write_sweep(const SweepResult& result, const std::filesystem::path& dir);

}  // namespace pocsa
