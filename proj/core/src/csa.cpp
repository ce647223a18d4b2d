#include "pocsa/csa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "pocsa/errors.hpp"

namespace pocsa {

namespace {

void check_coupling_inputs(std::span<const double> energies, double t_ac) {
  if (energies.empty()) throw ConfigError("coupling needs at least one energy");
  if (!(t_ac > 0.0)) throw ConfigError("acceptance temperature must be positive");
  for (double e : energies) {
    if (!std::isfinite(e)) throw EvaluationError("non-finite energy in coupling term");
  }
}

double max_energy(std::span<const double> energies) {
  return *std::max_element(energies.begin(), energies.end());
}

void record_row(RunTrace& trace, const TraceOptions& options, double best,
                double t_ac, double sigma2, double t_gen,
                std::size_t m) {
  trace.best_energy.push_back(best);
  trace.t_ac.push_back(t_ac);
  trace.sigma2.push_back(sigma2);
  trace.t_gen_ref.push_back(t_gen);
  if (options.members) trace.t_gen_members.emplace_back(m, t_gen);
}

}  // namespace

double coupling_term(std::span<const double> energies, double t_ac) {
  check_coupling_inputs(energies, t_ac);
  const double e_max = max_energy(energies);
  double gamma = 0.0;
  for (double e : energies) gamma += std::exp((e - e_max) / t_ac);
  return gamma;
}

std::vector<double> acceptance_probabilities(std::span<const double> energies,
                                             double t_ac) {
  check_coupling_inputs(energies, t_ac);
  const double e_max = max_energy(energies);
  std::vector<double> probs(energies.size());
  double gamma = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    probs[i] = std::exp((energies[i] - e_max) / t_ac);
    gamma += probs[i];
  }
  for (double& p : probs) p /= gamma;
  return probs;
}

double acceptance_variance(std::span<const double> probs) {
  const double m = static_cast<double>(probs.size());
  double sum_sq = 0.0;
  for (double p : probs) sum_sq += p * p;
  // Clip rounding residue at both ends: uniform probabilities and a single
  // member holding all of the mass.
  return std::clamp(sum_sq / m - 1.0 / (m * m), 0.0, (m - 1.0) / (m * m));
}

double desired_variance(std::size_t m) noexcept {
  const double md = static_cast<double>(m);
  return 0.99 * (md - 1.0) / (md * md);
}

CouplingState make_coupling_state(std::span<const double> energies,
                                  double t_ac_0, double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.1))
    throw ConfigError("alpha must lie in (0, 0.1]");
  CouplingState state;
  state.t_ac = t_ac_0;
  state.alpha = alpha;
  state.sigma2_desired = desired_variance(energies.size());
  evaluate_coupling(state, energies);
  state.sigma2 = acceptance_variance(state.probs);
  return state;
}

CouplingState update_acceptance_temperature(CouplingState state) {
  if (state.sigma2 < state.sigma2_desired) {
    state.t_ac *= 1.0 - state.alpha;
  } else {
    state.t_ac *= 1.0 + state.alpha;
  }
  // t_ac can only underflow after ~14000 consecutive decreases; keep it a
  // valid temperature.
  state.t_ac = std::max(state.t_ac, std::numeric_limits<double>::min());
  return state;
}

void evaluate_coupling(CouplingState& state, std::span<const double> energies) {
  state.probs = acceptance_probabilities(energies, state.t_ac);
  state.gamma = coupling_term(energies, state.t_ac);
}

void update_coupling(CouplingState& state, std::span<const double> energies) {
  state.sigma2 = acceptance_variance(acceptance_probabilities(energies, state.t_ac));
  state = update_acceptance_temperature(std::move(state));
  evaluate_coupling(state, energies);
}

double fast_schedule(const ScheduleSpec& spec, std::uint64_t k) {
  return spec.t_gen_0 / (static_cast<double>(k) + 1.0);
}

double scheduled_temperature(const ScheduleSpec& spec, std::uint64_t k) {
  return k == 0 ? spec.t_gen_0 : fast_schedule(spec, k - 1);
}

StepReport csa_step(Ensemble& ensemble, CouplingState& coupling, double t_gen,
                    EnsembleStreams& streams, const ObjectiveFunction& objective,
                    const StepOptions& options) {
  const std::size_t m = ensemble.size();
  StepReport report;
  for (std::size_t i = 0; i < m; ++i) {
    Solution probe = generate_probe(ensemble, i, t_gen, streams.members[i], objective);
    const double r = streams.members[i].uniform01();
    const bool downhill = probe.energy <= ensemble.members[i].energy;
    const bool uphill = options.allow_uphill && coupling.probs[i] > r;
    if (downhill || uphill) {
      ensemble.members[i] = std::move(probe);
      ++report.accepted;
      report.new_best |= track_best(ensemble, ensemble.members[i], i);
    }
  }
  update_coupling(coupling, ensemble.energies());
  ++ensemble.iteration;
  return report;
}

void validate(const CsaConfig& config) {
  if (config.optimizers < 2)
    throw ConfigError("CSA needs at least 2 optimizers");
  if (config.budget_per_optimizer < 1)
    throw ConfigError("budget per optimizer must be at least 1");
  if (config.t_gen_0 && !(*config.t_gen_0 > 0.0 && std::isfinite(*config.t_gen_0)))
    throw ConfigError("initial generation temperature must be positive");
  if (!(config.t_ac_0 > 0.0 && std::isfinite(config.t_ac_0)))
    throw ConfigError("initial acceptance temperature must be positive");
  if (!(config.alpha > 0.0 && config.alpha <= 0.1))
    throw ConfigError("alpha must lie in (0, 0.1]");
}

RunRecord run_csa(const ObjectiveFunction& objective, const CsaConfig& config,
                  std::uint64_t seed, const TraceOptions& trace_options) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = config.optimizers;
  EnsembleStreams streams(seed, m);
  Ensemble ensemble = initialize_ensemble(objective, m, streams.master);

  ScheduleSpec schedule;
  if (config.t_gen_0) {
    schedule.t_gen_0 = *config.t_gen_0;
  } else {
    schedule.t_gen_0 = kRandomTgenUpper * (1.0 - streams.master.uniform01());
  }

  CouplingState coupling =
      make_coupling_state(ensemble.energies(), config.t_ac_0, config.alpha);

  RunRecord record;
  record.algorithm = config.t_gen_0 ? "csa" : "r-csa";
  record.seed = seed;
  record.optimizers = m;
  record.budget_per_optimizer = config.budget_per_optimizer;
  record.t_gen_0 = schedule.t_gen_0;
  record.best_history.push_back(ensemble.best.energy);
  if (trace_options.enabled) {
    record.trace.emplace();
    record_row(*record.trace, trace_options, ensemble.best.energy, coupling.t_ac,
               coupling.sigma2, schedule.t_gen_0, m);
  }

  const std::uint64_t total = config.budget_per_optimizer * m;
  const StepOptions step_options{config.allow_uphill};
  while (ensemble.eval_count + m <= total) {
    const double t_gen = scheduled_temperature(schedule, ensemble.iteration);
    csa_step(ensemble, coupling, t_gen, streams, objective, step_options);
    record.best_history.push_back(ensemble.best.energy);
    if (record.trace) {
      record_row(*record.trace, trace_options, ensemble.best.energy,
                 coupling.t_ac, coupling.sigma2, t_gen, m);
    }
  }

  record.best = ensemble.best;
  record.eval_count = ensemble.eval_count;
  record.iterations = ensemble.iteration;
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

std::uint64_t sweep_member_seed(std::uint64_t seed, std::size_t j) noexcept {
  return derive_seed(seed, 0x5eedULL + j);
}

RunRecord run_bcsa_sweep(const ObjectiveFunction& objective,
                         const CsaConfig& config, std::uint64_t seed,
                         const TraceOptions& trace) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord result;
  result.algorithm = "b-csa";
  result.seed = seed;
  result.optimizers = config.optimizers;
  result.budget_per_optimizer = config.budget_per_optimizer;
  result.sweep_members.reserve(kSweepTemperatures.size());
  for (std::size_t j = 0; j < kSweepTemperatures.size(); ++j) {
    CsaConfig member_config = config;
    member_config.t_gen_0 = kSweepTemperatures[j];
    result.sweep_members.push_back(
        run_csa(objective, member_config, sweep_member_seed(seed, j), trace));
  }
  std::size_t winner = 0;
  for (std::size_t j = 1; j < result.sweep_members.size(); ++j) {
    if (result.sweep_members[j].final_best_energy() <
        result.sweep_members[winner].final_best_energy())
      winner = j;
  }
  const RunRecord& best = result.sweep_members[winner];
  result.selected_member = winner;
  result.t_gen_0 = best.t_gen_0;
  result.best = best.best;
  result.iterations = best.iterations;
  result.best_history = best.best_history;
  result.trace = best.trace;
  for (const auto& member : result.sweep_members) result.eval_count += member.eval_count;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace pocsa
