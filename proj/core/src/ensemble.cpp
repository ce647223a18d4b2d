#include "pocsa/ensemble.hpp"

#include <string>

#include "pocsa/errors.hpp"

namespace pocsa {

std::vector<double> Ensemble::energies() const {
  std::vector<double> out;
  out.reserve(members.size());
  for (const auto& s : members) out.push_back(s.energy);
  return out;
}

EnsembleStreams::EnsembleStreams(std::uint64_t seed, std::size_t m)
    : master(seed, 0) {
  members.reserve(m);
  for (std::size_t i = 0; i < m; ++i) members.emplace_back(seed, i + 1);
}

Ensemble initialize_ensemble(const ObjectiveFunction& objective, std::size_t m,
                             RngStream& stream) {
  if (m < 2) {
    throw ConfigError("ensemble needs at least 2 optimizers, got " +
                      std::to_string(m));
  }
  const auto lo = objective.lower();
  const auto hi = objective.upper();
  Ensemble ensemble;
  ensemble.members.resize(m);
  for (auto& member : ensemble.members) {
    member.coords.resize(objective.dimension());
    for (std::size_t j = 0; j < member.coords.size(); ++j) {
      member.coords[j] = lo[j] + (hi[j] - lo[j]) * stream.uniform01();
    }
    member.energy = objective.evaluate(member.coords);
    ++ensemble.eval_count;
  }
  ensemble.best_index = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (ensemble.members[i].energy < ensemble.members[ensemble.best_index].energy)
      ensemble.best_index = i;
  }
  ensemble.best = ensemble.members[ensemble.best_index];
  return ensemble;
}

std::vector<double> perturb(std::span<const double> x,
                            std::span<const double> epsilon, double t_gen,
                            const ObjectiveFunction& objective) {
  std::vector<double> y(x.begin(), x.end());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] += epsilon[j] * t_gen;
  objective.clamp(y);
  return y;
}

Solution generate_probe(Ensemble& ensemble, std::size_t index, double t_gen,
                        RngStream& stream, const ObjectiveFunction& objective) {
  const auto& x = ensemble.members[index].coords;
  Solution probe;
  probe.coords.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    probe.coords[j] = x[j] + stream.cauchy() * t_gen;
  objective.clamp(probe.coords);
  probe.energy = objective.evaluate(probe.coords);
  ++ensemble.eval_count;
  return probe;
}

bool track_best(Ensemble& ensemble, const Solution& candidate,
                std::size_t member_index) {
  if (!(candidate.energy < ensemble.best.energy)) return false;
  ensemble.best = candidate;
  ensemble.best_index = member_index;
  return true;
}

}  // namespace pocsa
