#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pocsa/objective.hpp"
#include "pocsa/rng.hpp"

namespace pocsa {

struct Solution {
  std::vector<double> coords;
  double energy = 0.0;
};

/// The coupled set of current solutions plus the global best-so-far.
struct Ensemble {
  std::vector<Solution> members;
  std::size_t best_index = 0;
  Solution best;
  std::uint64_t eval_count = 0;
  std::uint64_t iteration = 0;

  std::size_t size() const noexcept { return members.size(); }
  std::vector<double> energies() const;
};

/// Master stream (id 0) plus one stream per optimizer (ids 1..m).
struct EnsembleStreams {
  RngStream master;
  std::vector<RngStream> members;

  EnsembleStreams(std::uint64_t seed, std::size_t m);
};

/// Samples m solutions uniformly in the objective's box. Requires m >= 2.
Ensemble initialize_ensemble(const ObjectiveFunction& objective, std::size_t m,
                             RngStream& stream);

/// Clamped x + epsilon * t_gen. No evaluation.
std::vector<double> perturb(std::span<const double> x,
                            std::span<const double> epsilon, double t_gen,
                            const ObjectiveFunction& objective);

/// Cauchy probe around member `index` with dispersion t_gen; draws one
/// deviate per coordinate from `stream`, evaluates the probe and charges one
/// evaluation to the ensemble.
Solution generate_probe(Ensemble& ensemble, std::size_t index, double t_gen,
                        RngStream& stream, const ObjectiveFunction& objective);

/// Replaces the best-so-far iff candidate is strictly better.
bool track_best(Ensemble& ensemble, const Solution& candidate,
                std::size_t member_index);

}  // namespace pocsa
