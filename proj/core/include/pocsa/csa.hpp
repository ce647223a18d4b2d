#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pocsa/ensemble.hpp"
#include "pocsa/objective.hpp"
#include "pocsa/run_record.hpp"

namespace pocsa {

/// Coupled acceptance state shared by the whole ensemble.
struct CouplingState {
  double t_ac = 1.0;
  double gamma = 0.0;
  // Acceptance probability of each member at the current t_ac.
  std::vector<double> probs;
  // Variance that drove the most recent t_ac update.
  double sigma2 = 0.0;
  double sigma2_desired = 0.0;
  double alpha = 0.05;
};

/// Sum of max-shifted Boltzmann factors exp((E_i - max E) / t_ac). Always >= 1.
double coupling_term(std::span<const double> energies, double t_ac);

/// exp((E_i - max E) / t_ac) / gamma for every member; sums to one.
std::vector<double> acceptance_probabilities(std::span<const double> energies,
                                             double t_ac);

/// Population variance of probs about their known mean 1/m, clipped to
/// [0, (m - 1) / m^2].
double acceptance_variance(std::span<const double> probs);

/// 99% of the largest attainable variance (m - 1) / m^2.
double desired_variance(std::size_t m) noexcept;

CouplingState make_coupling_state(std::span<const double> energies,
                                  double t_ac_0, double alpha);

/// Shrinks t_ac by (1 - alpha) when sigma2 < sigma2_desired, grows it by
/// (1 + alpha) otherwise.
CouplingState update_acceptance_temperature(CouplingState state);

/// Recomputes gamma and probs from energies at the state's t_ac.
void evaluate_coupling(CouplingState& state, std::span<const double> energies);

/// Post-acceptance update: sigma2 from the new energies, t_ac control, then
/// gamma/probs at the new temperature.
void update_coupling(CouplingState& state, std::span<const double> energies);

struct ScheduleSpec {
  double t_gen_0 = 1.0;
};

/// Fast-annealing schedule: the temperature that follows iteration k,
/// t_gen_0 / (k + 1).
double fast_schedule(const ScheduleSpec& spec, std::uint64_t k);

/// Generation temperature used during 0-based iteration k: t_gen_0 for k = 0,
/// fast_schedule(k - 1) afterwards.
double scheduled_temperature(const ScheduleSpec& spec, std::uint64_t k);

struct StepOptions {
  // Rule B (coupled uphill acceptance). Tests switch it off to isolate rule A.
  bool allow_uphill = true;
};

struct StepReport {
  std::size_t accepted = 0;
  bool new_best = false;
};

/// One CSA iteration with a shared generation temperature. Every member
/// draws D Cauchy deviates and then one uniform from its own stream, in
/// member order, regardless of the outcome.
StepReport csa_step(Ensemble& ensemble, CouplingState& coupling, double t_gen,
                    EnsembleStreams& streams, const ObjectiveFunction& objective,
                    const StepOptions& options = {});

inline constexpr std::array<double, 7> kSweepTemperatures = {
    0.001, 0.01, 0.1, 1.0, 10.0, 100.0, 1000.0};

inline constexpr double kRandomTgenUpper = 100.0;

struct CsaConfig {
  std::size_t optimizers = 2;
  std::uint64_t budget_per_optimizer = 1;
  // Unset: R-CSA, drawn uniformly from (0, 100] on the master stream.
  std::optional<double> t_gen_0;
  double t_ac_0 = 1.0;
  double alpha = 0.05;
  bool allow_uphill = true;
};

void validate(const CsaConfig& config);

/// Runs CSA until optimizers * budget_per_optimizer evaluations are spent.
RunRecord run_csa(const ObjectiveFunction& objective, const CsaConfig& config,
                  std::uint64_t seed, const TraceOptions& trace = {});

/// Seed used by sweep member j of a B-CSA run seeded with `seed`.
std::uint64_t sweep_member_seed(std::uint64_t seed, std::size_t j) noexcept;

/// B-CSA: one CSA campaign per entry of kSweepTemperatures on its own
/// sub-seed; the returned record carries the lowest final energy.
RunRecord run_bcsa_sweep(const ObjectiveFunction& objective,
                         const CsaConfig& config, std::uint64_t seed,
                         const TraceOptions& trace = {});

}  // namespace pocsa
