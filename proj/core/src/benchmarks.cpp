#include "pocsa/benchmarks.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "pocsa/errors.hpp"

namespace pocsa::bench {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kWeierstrassTerms = 21;  // k = 0..20

const std::array<FunctionInfo, kFunctionCount> kInfo = {{
    {1, "sphere", -100.0, 100.0, false},
    {2, "rosenbrock", -2.048, 2.048, false},
    {3, "ackley", -32.768, 32.768, false},
    {4, "griewank", -600.0, 600.0, false},
    {5, "weierstrass", -0.5, 0.5, false},
    {6, "rastrigin", -5.12, 5.12, false},
    {7, "noncontinuous-rastrigin", -5.12, 5.12, false},
    {8, "schwefel", -500.0, 500.0, false},
    {9, "rotated-ackley", -32.768, 32.768, true},
    {10, "rotated-griewank", -600.0, 600.0, true},
    {11, "rotated-weierstrass", -0.5, 0.5, true},
    {12, "rotated-rastrigin", -5.12, 5.12, true},
    {13, "rotated-noncontinuous-rastrigin", -5.12, 5.12, true},
    {14, "rotated-schwefel", -500.0, 500.0, true},
}};

struct WeierstrassTables {
  std::array<double, kWeierstrassTerms> a{};  // 0.5^k
  std::array<double, kWeierstrassTerms> b{};  // 2 pi 3^k
  double offset = 0.0;                        // sum_k a_k cos(b_k * 0.5)

  WeierstrassTables() {
    double ak = 1.0;
    double bk = 1.0;
    for (int k = 0; k < kWeierstrassTerms; ++k) {
      a[k] = ak;
      b[k] = kTwoPi * bk;
      ak *= 0.5;
      bk *= 3.0;
    }
    // Same expression path as the per-coordinate sum, so f5(0) is exactly 0.
    for (int k = 0; k < kWeierstrassTerms; ++k) offset += a[k] * std::cos(b[k] * 0.5);
  }
};

const WeierstrassTables& weierstrass_tables() {
  static const WeierstrassTables tables;
  return tables;
}

double rastrigin_term(double v) {
  return v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
}

}  // namespace

const FunctionInfo& info(int id) {
  if (id < 1 || id > kFunctionCount)
    throw ConfigError("unknown benchmark function id " + std::to_string(id));
  return kInfo[static_cast<std::size_t>(id - 1)];
}

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = 1.0 - x[i];
    const double b = x[i + 1] - x[i] * x[i];
    s += a * a + 100.0 * b * b;
  }
  return s;
}

double ackley(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(kTwoPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 +
         std::numbers::e;
}

double griewank(std::span<const double> x) {
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i] / 4000.0;
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s - p + 1.0;
}

double weierstrass(std::span<const double> x) {
  const auto& t = weierstrass_tables();
  double s = 0.0;
  for (double v : x) {
    for (int k = 0; k < kWeierstrassTerms; ++k) s += t.a[k] * std::cos(t.b[k] * (v + 0.5));
  }
  return s - static_cast<double>(x.size()) * t.offset;
}

double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += rastrigin_term(v);
  return s;
}

double noncontinuous_rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) {
    // std::round rounds halves away from zero.
    const double y = std::abs(v) < 0.5 ? v : std::round(2.0 * v) / 2.0;
    s += rastrigin_term(y);
  }
  return s;
}

double schwefel(std::span<const double> x) {
  double s = 419.0 * static_cast<double>(x.size());
  for (double v : x) s += v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

namespace {

// y = M (x - 420.96) + 420.96.
std::vector<double> shift_rotate(std::span<const double> x, const RotationMatrix& m) {
  std::vector<double> shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - kSchwefelShift;
  std::vector<double> y = m.apply(shifted);
  for (double& v : y) v += kSchwefelShift;
  return y;
}

double schwefel_penalty(double ay) { return 0.001 * (ay - 500.0) * (ay - 500.0); }

}  // namespace

std::vector<double> f14_shift(std::span<const double> x, const RotationMatrix& m) {
  std::vector<double> z = shift_rotate(x, m);
  for (double& y : z) {
    const double ay = std::abs(y);
    y = ay <= 500.0 ? y * std::sin(std::sqrt(ay)) : schwefel_penalty(ay);
  }
  return z;
}

double rotated_schwefel(std::span<const double> x, const RotationMatrix& m) {
  double s = 419.0 * static_cast<double>(x.size());
  for (double y : shift_rotate(x, m)) {
    const double ay = std::abs(y);
    if (ay <= 500.0) {
      s -= y * std::sin(std::sqrt(ay));
    } else {
      s += schwefel_penalty(ay);
    }
  }
  return s;
}

double evaluate(const BenchmarkSpec& spec, std::span<const double> x) {
  if (x.size() != spec.dimension) {
    throw EvaluationError("f" + std::to_string(spec.id) + ": expected " +
                          std::to_string(spec.dimension) + " coordinates, got " +
                          std::to_string(x.size()));
  }
  const FunctionInfo& fi = info(spec.id);
  if (!fi.rotated) {
    switch (spec.id) {
      case 1: return sphere(x);
      case 2: return rosenbrock(x);
      case 3: return ackley(x);
      case 4: return griewank(x);
      case 5: return weierstrass(x);
      case 6: return rastrigin(x);
      case 7: return noncontinuous_rastrigin(x);
      case 8: return schwefel(x);
    }
  }
  if (!spec.rotation || spec.rotation->dimension() != spec.dimension) {
    throw EvaluationError("f" + std::to_string(spec.id) +
                          " needs a rotation matrix of matching size");
  }
  if (spec.id == 14) return rotated_schwefel(x, *spec.rotation);
  const std::vector<double> z = spec.rotation->apply(x);
  BenchmarkSpec base{spec.id - 6, spec.dimension, std::nullopt};
  return evaluate(base, z);
}

ObjectiveFunction make_objective(BenchmarkSpec spec) {
  const FunctionInfo& fi = info(spec.id);
  if (spec.dimension == 0) throw ConfigError("benchmark dimension must be positive");
  if (fi.rotated && (!spec.rotation || spec.rotation->dimension() != spec.dimension))
    throw ConfigError(std::string(fi.name) + " needs a rotation matrix of matching size");
  std::string name = "f" + std::to_string(fi.id) + "-" + fi.name;
  const std::size_t d = spec.dimension;
  return ObjectiveFunction(
      std::move(name), d, fi.lower, fi.upper,
      [spec = std::move(spec)](std::span<const double> x) { return evaluate(spec, x); },
      // The Schwefel variants bottom out near 0.0171 D, not at 0.
      fi.id == 8 || fi.id == 14 ? std::nullopt : std::optional<double>(0.0));
}

}  // namespace pocsa::bench
