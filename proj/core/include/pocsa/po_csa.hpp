#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pocsa/csa.hpp"
#include "pocsa/ensemble.hpp"
#include "pocsa/orbit.hpp"
#include "pocsa/run_record.hpp"

namespace pocsa {

/// Deterministic acceptance with a minimum relative gain:
/// e_probe <= e_current - delta * |e_current|. At e_current == 0 any strictly
/// negative probe qualifies.
bool accept_with_min_gain(double e_current, double e_probe, double delta) noexcept;

struct PoCsaConfig {
  std::size_t optimizers = 2;
  std::uint64_t budget_per_optimizer = 1;
  double t_ac_0 = 1.0;
  double alpha = 0.05;
  OrbitParams orbit;
  double delta = 0.001;
  // Start every generation temperature here instead of uniform (0, 100].
  std::optional<double> initial_t_gen;
  bool allow_uphill = true;
};

void validate(const PoCsaConfig& config);

/// Ensemble, coupling and orbit of one PO-CSA run. orbit.value[i] is the
/// generation temperature of optimizer i.
struct PoCsaState {
  Ensemble ensemble;
  CouplingState coupling;
  OrbitState orbit;
  double delta = 0.001;
};

/// Initializes the ensemble and coupling from the master stream, then draws
/// the orbit (also from the master stream) with the best initial member as
/// reference.
PoCsaState init_po_csa(const ObjectiveFunction& objective,
                       const PoCsaConfig& config, EnsembleStreams& streams);

/// One PO-CSA iteration: per-member probes at their own temperatures,
/// min-gain or coupled acceptance, at most one rebase onto the iteration's
/// new best, t_ac control, then one orbit step.
StepReport po_csa_step(PoCsaState& state, EnsembleStreams& streams,
                       const ObjectiveFunction& objective,
                       const StepOptions& options = {});

RunRecord run_po_csa(const ObjectiveFunction& objective,
                     const PoCsaConfig& config, std::uint64_t seed,
                     const TraceOptions& trace = {});

}  // namespace pocsa
