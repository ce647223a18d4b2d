#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pocsa/objective.hpp"
#include "pocsa/rotation.hpp"

namespace pocsa::bench {

inline constexpr int kFunctionCount = 14;
inline constexpr double kSchwefelShift = 420.96;

struct FunctionInfo {
  int id;
  const char* name;
  double lower;
  double upper;
  bool rotated;
};

/// Metadata for f1..f14; throws ConfigError on an unknown id.
const FunctionInfo& info(int id);

// Group 1 and 2 kernels. Each takes the full point.
double sphere(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double ackley(std::span<const double> x);
double griewank(std::span<const double> x);
double weierstrass(std::span<const double> x);
double rastrigin(std::span<const double> x);
double noncontinuous_rastrigin(std::span<const double> x);
double schwefel(std::span<const double> x);

/// y = M (x - 420.96) + 420.96, then z_i = y_i sin(sqrt|y_i|) inside
/// |y_i| <= 500 and the penalty 0.001 (|y_i| - 500)^2 outside.
std::vector<double> f14_shift(std::span<const double> x, const RotationMatrix& m);

/// 419 D - sum of in-range z_i plus the sum of out-of-range penalties, so the
/// optimum sits at y = 420.96... with the same floor as f8.
double rotated_schwefel(std::span<const double> x, const RotationMatrix& m);

struct BenchmarkSpec {
  int id = 1;
  std::size_t dimension = 2;
  std::optional<RotationMatrix> rotation;  // required for ids 9..14
};

/// Throws EvaluationError on a dimension mismatch or a missing rotation.
double evaluate(const BenchmarkSpec& spec, std::span<const double> x);

/// Wraps a spec as an ObjectiveFunction over its declared input box.
ObjectiveFunction make_objective(BenchmarkSpec spec);

}  // namespace pocsa::bench
