#include "pocsa/po_csa.hpp"

#include <chrono>
#include <cmath>

#include "pocsa/errors.hpp"

namespace pocsa {

namespace {

void record_row(RunTrace& trace, const TraceOptions& options,
                const PoCsaState& state) {
  trace.best_energy.push_back(state.ensemble.best.energy);
  trace.t_ac.push_back(state.coupling.t_ac);
  trace.sigma2.push_back(state.coupling.sigma2);
  trace.t_gen_ref.push_back(state.orbit.reference());
  if (options.members) trace.t_gen_members.push_back(state.orbit.value);
}

}  // namespace

bool accept_with_min_gain(double e_current, double e_probe, double delta) noexcept {
  if (e_current == 0.0) return e_probe < 0.0;
  return e_probe <= e_current - delta * std::abs(e_current);
}

void validate(const PoCsaConfig& config) {
  if (config.optimizers < 2)
    throw ConfigError("PO-CSA needs at least 2 optimizers");
  if (config.budget_per_optimizer < 1)
    throw ConfigError("budget per optimizer must be at least 1");
  if (!(config.t_ac_0 > 0.0 && std::isfinite(config.t_ac_0)))
    throw ConfigError("initial acceptance temperature must be positive");
  if (!(config.alpha > 0.0 && config.alpha <= 0.1))
    throw ConfigError("alpha must lie in (0, 0.1]");
  // delta = 0 is admitted: it reduces rule A to plain E(y) <= E(x).
  if (!(config.delta >= 0.0 && config.delta <= 0.05))
    throw ConfigError("minimum gain delta must lie in [0, 0.05]");
  if (config.initial_t_gen && !(*config.initial_t_gen > 0.0 &&
                                std::isfinite(*config.initial_t_gen)))
    throw ConfigError("initial generation temperature must be positive");
  validate(config.orbit);
}

PoCsaState init_po_csa(const ObjectiveFunction& objective,
                       const PoCsaConfig& config, EnsembleStreams& streams) {
  validate(config);
  PoCsaState state;
  state.delta = config.delta;
  state.ensemble = initialize_ensemble(objective, config.optimizers, streams.master);
  state.coupling = make_coupling_state(state.ensemble.energies(), config.t_ac_0,
                                       config.alpha);
  state.orbit = init_orbit(config.optimizers, state.ensemble.best_index,
                           config.orbit, streams.master, config.initial_t_gen);
  return state;
}

StepReport po_csa_step(PoCsaState& state, EnsembleStreams& streams,
                       const ObjectiveFunction& objective,
                       const StepOptions& options) {
  Ensemble& ensemble = state.ensemble;
  const std::size_t m = ensemble.size();
  StepReport report;
  for (std::size_t i = 0; i < m; ++i) {
    Solution probe = generate_probe(ensemble, i, state.orbit.value[i],
                                    streams.members[i], objective);
    const double r = streams.members[i].uniform01();
    const bool gain =
        accept_with_min_gain(ensemble.members[i].energy, probe.energy, state.delta);
    const bool uphill = options.allow_uphill && state.coupling.probs[i] > r;
    if (gain || uphill) {
      ensemble.members[i] = std::move(probe);
      ++report.accepted;
      // Sequential strict tracking leaves the iteration's overall minimum
      // (lowest index on ties) as the best.
      report.new_best |= track_best(ensemble, ensemble.members[i], i);
    }
  }
  if (report.new_best) rebase_bounds(state.orbit, ensemble.best_index);
  update_coupling(state.coupling, ensemble.energies());
  po_step(state.orbit);
  ++ensemble.iteration;
  return report;
}

RunRecord run_po_csa(const ObjectiveFunction& objective,
                     const PoCsaConfig& config, std::uint64_t seed,
                     const TraceOptions& trace_options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = config.optimizers;
  EnsembleStreams streams(seed, m);
  PoCsaState state = init_po_csa(objective, config, streams);

  RunRecord record;
  record.algorithm = "po-csa";
  record.seed = seed;
  record.optimizers = m;
  record.budget_per_optimizer = config.budget_per_optimizer;
  record.t_gen_0 = state.orbit.reference();
  record.best_history.push_back(state.ensemble.best.energy);
  if (trace_options.enabled) {
    record.trace.emplace();
    record_row(*record.trace, trace_options, state);
  }

  const std::uint64_t total = config.budget_per_optimizer * m;
  const StepOptions step_options{config.allow_uphill};
  while (state.ensemble.eval_count + m <= total) {
    po_csa_step(state, streams, objective, step_options);
    record.best_history.push_back(state.ensemble.best.energy);
    if (record.trace) record_row(*record.trace, trace_options, state);
  }

  record.best = state.ensemble.best;
  record.eval_count = state.ensemble.eval_count;
  record.iterations = state.ensemble.iteration;
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace pocsa
