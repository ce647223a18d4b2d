#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pocsa/rng.hpp"

namespace pocsa {

struct OrbitParams {
  double beta = 10.0;  // bracket half-width as a ratio around the reference
  double phi = 0.1;    // per-step geometric movement
  double mu = 0.05;    // bound expansion on every hit
};

/// Throws ConfigError unless beta > 1 and phi, mu lie in (0, 0.1].
void validate(const OrbitParams& params);

/// Dispersion variables orbiting the best member's value.
///
/// Every non-best member moves geometrically towards its upper or lower
/// bound and turns around on a hit, widening the bound it hit. The best
/// member's value is frozen and is the reference for everyone's bounds.
struct OrbitState {
  std::vector<double> value;
  std::vector<int> direction;  // +1 or -1; stored even for the best member
  std::vector<double> upper;
  std::vector<double> lower;
  std::size_t best_member = 0;
  OrbitParams params;

  std::size_t size() const noexcept { return value.size(); }
  double reference() const { return value[best_member]; }
  // Direction as rendered in traces: 0 for the exempt best member.
  int displayed_direction(std::size_t i) const {
    return i == best_member ? 0 : direction[i];
  }
};

inline constexpr double kOrbitInitUpper = 100.0;

/// Draws every value uniformly from (0, 100] and every direction from
/// {-1, +1}, then brackets all members around value[best_member].
/// `reference_hint` overrides the best member's drawn value only.
OrbitState init_orbit(std::size_t m, std::size_t best_member,
                      const OrbitParams& params, RngStream& stream,
                      std::optional<double> reference_hint = std::nullopt);

/// Makes `new_best` the reference and resets every bracket to
/// [V_best / beta, beta * V_best], discarding earlier expansions.
void rebase_bounds(OrbitState& state, std::size_t new_best);

/// Advances every non-best member by one geometric step. A step that would
/// reach its bound is reverted instead, the direction flips, and the bound
/// widens by (1 + mu) on top or (1 - mu) at the bottom.
void po_step(OrbitState& state);

}  // namespace pocsa
