#include "pocsa/objective.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pocsa/errors.hpp"

namespace pocsa {

ObjectiveFunction::ObjectiveFunction(std::string name, std::vector<double> lower,
                                     std::vector<double> upper,
                                     Evaluator evaluator,
                                     std::optional<double> optimum_value)
    : name_(std::move(name)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      evaluator_(std::move(evaluator)),
      optimum_value_(optimum_value) {
  if (lower_.empty()) throw ConfigError("objective '" + name_ + "': dimension must be positive");
  if (lower_.size() != upper_.size())
    throw ConfigError("objective '" + name_ + "': bound vectors differ in length");
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!(lower_[j] < upper_[j]))
      throw ConfigError("objective '" + name_ + "': lower bound not below upper bound at coordinate " +
                        std::to_string(j));
  }
  if (!evaluator_) throw ConfigError("objective '" + name_ + "': missing evaluator");
}

ObjectiveFunction::ObjectiveFunction(std::string name, std::size_t dimension,
                                     double lower, double upper,
                                     Evaluator evaluator,
                                     std::optional<double> optimum_value)
    : ObjectiveFunction(std::move(name), std::vector<double>(dimension, lower),
                        std::vector<double>(dimension, upper),
                        std::move(evaluator), optimum_value) {}

double ObjectiveFunction::evaluate(std::span<const double> x) const {
  if (x.size() != dimension()) {
    throw EvaluationError("objective '" + name_ + "': expected " +
                          std::to_string(dimension()) + " coordinates, got " +
                          std::to_string(x.size()));
  }
  const double value = evaluator_(x);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "objective '" << name_ << "' returned " << value << " at (";
    for (std::size_t j = 0; j < x.size(); ++j) msg << (j ? ", " : "") << x[j];
    msg << ")";
    throw EvaluationError(msg.str());
  }
  return value;
}

void ObjectiveFunction::clamp(std::span<double> x) const noexcept {
  for (std::size_t j = 0; j < x.size() && j < lower_.size(); ++j)
    x[j] = std::clamp(x[j], lower_[j], upper_[j]);
}

bool ObjectiveFunction::contains(std::span<const double> x) const noexcept {
  if (x.size() != dimension()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) return false;
  return true;
}

}  // namespace pocsa
