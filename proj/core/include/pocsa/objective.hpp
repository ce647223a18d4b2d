#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pocsa {

/// A deterministic continuous function on an axis-aligned box.
class ObjectiveFunction {
 public:
  using Evaluator = std::function<double(std::span<const double>)>;

  ObjectiveFunction(std::string name, std::vector<double> lower,
                    std::vector<double> upper, Evaluator evaluator,
                    std::optional<double> optimum_value = std::nullopt);

  // Same range on every coordinate.
  ObjectiveFunction(std::string name, std::size_t dimension, double lower,
                    double upper, Evaluator evaluator,
                    std::optional<double> optimum_value = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return lower_.size(); }
  std::span<const double> lower() const noexcept { return lower_; }
  std::span<const double> upper() const noexcept { return upper_; }
  const std::optional<double>& optimum_value() const noexcept {
    return optimum_value_;
  }

  // Raw evaluation, no finiteness check.
  double operator()(std::span<const double> x) const { return evaluator_(x); }

  // Evaluates and throws EvaluationError on a non-finite result or on a
  // dimension mismatch.
  double evaluate(std::span<const double> x) const;

  // Clamps every coordinate into [lower, upper].
  void clamp(std::span<double> x) const noexcept;

  bool contains(std::span<const double> x) const noexcept;

 private:
  std::string name_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  Evaluator evaluator_;
  std::optional<double> optimum_value_;
};

}  // namespace pocsa
