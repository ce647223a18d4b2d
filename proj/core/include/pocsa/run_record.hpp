#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pocsa/ensemble.hpp"

namespace pocsa {

struct TraceOptions {
  bool enabled = false;
  // Per-optimizer generation temperatures; large for long runs.
  bool members = false;
};

/// Per-iteration series. Row 0 is the initialized state, row k the state
/// after iteration k.
struct RunTrace {
  std::vector<double> best_energy;
  std::vector<double> t_ac;
  std::vector<double> sigma2;
  std::vector<double> t_gen_ref;
  std::vector<std::vector<double>> t_gen_members;

  std::size_t rows() const noexcept { return best_energy.size(); }
};

struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t optimizers = 0;
  std::uint64_t budget_per_optimizer = 0;
  // CSA: initial generation temperature. PO-CSA: initial orbit reference.
  double t_gen_0 = 0.0;

  Solution best;
  std::uint64_t eval_count = 0;
  std::uint64_t iterations = 0;
  // Best-so-far energy; index 0 after initialization, index k after
  // iteration k.
  std::vector<double> best_history;
  std::optional<RunTrace> trace;

  // B-CSA only: the seven member campaigns and the index of the winner.
  std::vector<RunRecord> sweep_members;
  std::size_t selected_member = 0;

  double wall_seconds = 0.0;

  double final_best_energy() const noexcept { return best.energy; }
};

}  // namespace pocsa
