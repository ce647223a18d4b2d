#include "pocsa/orbit.hpp"

#include "pocsa/errors.hpp"

namespace pocsa {

void validate(const OrbitParams& params) {
  if (!(params.beta > 1.0))
    throw ConfigError("orbit boundary multiplier beta must exceed 1");
  if (!(params.phi > 0.0 && params.phi <= 0.1))
    throw ConfigError("orbit movement factor phi must lie in (0, 0.1]");
  if (!(params.mu > 0.0 && params.mu <= 0.1))
    throw ConfigError("orbit bound factor mu must lie in (0, 0.1]");
}

OrbitState init_orbit(std::size_t m, std::size_t best_member,
                      const OrbitParams& params, RngStream& stream,
                      std::optional<double> reference_hint) {
  validate(params);
  if (best_member >= m) throw ConfigError("orbit best member out of range");
  if (reference_hint && !(*reference_hint > 0.0))
    throw ConfigError("orbit initial value must be positive");
  OrbitState state;
  state.params = params;
  state.value.resize(m);
  state.direction.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    state.value[i] = kOrbitInitUpper * (1.0 - stream.uniform01());
    state.direction[i] = stream.uniform01() < 0.5 ? -1 : 1;
  }
  if (reference_hint) state.value[best_member] = *reference_hint;
  state.upper.resize(m);
  state.lower.resize(m);
  rebase_bounds(state, best_member);
  return state;
}

void rebase_bounds(OrbitState& state, std::size_t new_best) {
  state.best_member = new_best;
  const double reference = state.value[new_best];
  const double beta = state.params.beta;
  for (std::size_t i = 0; i < state.size(); ++i) {
    state.upper[i] = beta * reference;
    state.lower[i] = reference / beta;
  }
}

void po_step(OrbitState& state) {
  const double phi = state.params.phi;
  const double mu = state.params.mu;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i == state.best_member) continue;
    if (state.direction[i] > 0) {
      const double moved = state.value[i] * (1.0 + phi);
      if (moved >= state.upper[i]) {
        state.direction[i] = -1;
        state.upper[i] *= 1.0 + mu;
      } else {
        state.value[i] = moved;
      }
    } else {
      const double moved = state.value[i] * (1.0 - phi);
      if (moved <= state.lower[i]) {
        state.direction[i] = 1;
        state.lower[i] *= 1.0 - mu;
      } else {
        state.value[i] = moved;
      }
    }
  }
}

}  // namespace pocsa
