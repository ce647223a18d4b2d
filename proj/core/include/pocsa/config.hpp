#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pocsa {

enum class Algorithm { csa, r_csa, b_csa, po_csa };

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept;

/// Everything needed to regenerate a campaign. Field names double as the
/// keys of the key=value config file.
struct CampaignConfig {
  Algorithm algorithm = Algorithm::po_csa;
  int function = 1;
  std::size_t dim = 5;
  std::size_t optimizers = 0;  // 0 means "same as dim"
  std::uint64_t budget_per_optimizer = 10000;
  std::size_t runs = 25;
  std::uint64_t seed = 1;
  // Rotation matrix seed for f9..f14; unset derives it from `seed`.
  std::optional<std::uint64_t> rotation_seed;
  std::size_t rotation_count = 0;  // planar rotations; 0 means 2D - 2

  // csa: required initial generation temperature. po-csa: optional common
  // initial generation temperature. Ignored by r-csa and b-csa.
  std::optional<double> tgen0;
  double tac0 = 1.0;
  double alpha = 0.05;
  double beta = 10.0;
  double phi = 0.1;
  double mu = 0.05;
  double delta = 0.001;

  bool trace = false;
  bool trace_members = false;
  std::string out_dir = "out";
  std::size_t threads = 1;

  std::size_t effective_optimizers() const noexcept {
    return optimizers == 0 ? dim : optimizers;
  }
  std::uint64_t effective_rotation_seed() const noexcept;
};

/// One human-readable message per violated constraint; empty when valid.
std::vector<std::string> validate(const CampaignConfig& config);

/// Sets one field from its textual value. Throws ConfigError on an unknown
/// key or an unparsable value.
void set_config_value(CampaignConfig& config, std::string_view key,
                      std::string_view value);

/// Applies a key=value file; blank lines and '#' comments are skipped.
void apply_config_file(CampaignConfig& config, const std::string& path);

/// Canonical (key, value) text of every field, in declaration order. Unset
/// optionals are omitted.
std::vector<std::pair<std::string, std::string>> config_entries(
    const CampaignConfig& config);

/// Shortest round-trip text of a double.
std::string format_double(double value);

}  // namespace pocsa
