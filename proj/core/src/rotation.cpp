#include "pocsa/rotation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "pocsa/errors.hpp"
#include "pocsa/rng.hpp"

namespace pocsa {

RotationMatrix::RotationMatrix(std::size_t dimension, std::vector<double> entries,
                               std::uint64_t seed)
    : dimension_(dimension), entries_(std::move(entries)), seed_(seed) {
  if (entries_.size() != dimension_ * dimension_)
    throw ConfigError("rotation matrix needs D*D entries");
}

RotationMatrix RotationMatrix::identity(std::size_t dimension, std::uint64_t seed) {
  std::vector<double> e(dimension * dimension, 0.0);
  for (std::size_t i = 0; i < dimension; ++i) e[i * dimension + i] = 1.0;
  return RotationMatrix(dimension, std::move(e), seed);
}

RotationMatrix RotationMatrix::planar(std::size_t dimension, std::size_t i,
                                      std::size_t j, double angle) {
  RotationMatrix m = identity(dimension);
  m.rotate_rows(i, j, angle);
  return m;
}

void RotationMatrix::apply(std::span<const double> x, std::span<double> out) const {
  for (std::size_t r = 0; r < dimension_; ++r) {
    const double* row = entries_.data() + r * dimension_;
    double acc = 0.0;
    for (std::size_t c = 0; c < dimension_; ++c) acc += row[c] * x[c];
    out[r] = acc;
  }
}

std::vector<double> RotationMatrix::apply(std::span<const double> x) const {
  std::vector<double> out(dimension_);
  apply(x, out);
  return out;
}

void RotationMatrix::rotate_rows(std::size_t i, std::size_t j, double angle) {
  if (i >= dimension_ || j >= dimension_ || i == j)
    throw ConfigError("planar rotation needs two distinct axes in range");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (std::size_t col = 0; col < dimension_; ++col) {
    const double a = entries_[i * dimension_ + col];
    const double b = entries_[j * dimension_ + col];
    entries_[i * dimension_ + col] = c * a - s * b;
    entries_[j * dimension_ + col] = s * a + c * b;
  }
}

RotationMatrix RotationMatrix::transpose() const {
  std::vector<double> t(entries_.size());
  for (std::size_t r = 0; r < dimension_; ++r)
    for (std::size_t c = 0; c < dimension_; ++c)
      t[c * dimension_ + r] = entries_[r * dimension_ + c];
  return RotationMatrix(dimension_, std::move(t), seed_);
}

RotationMatrix generate_rotation(std::size_t dimension, std::uint64_t seed,
                                 std::size_t rotations) {
  if (dimension < 2) throw ConfigError("rotation needs dimension >= 2");
  if (rotations == 0) rotations = dimension == 2 ? 2 : 2 * dimension - 2;
  RngStream stream(seed, 0);
  RotationMatrix m = RotationMatrix::identity(dimension, seed);
  const auto d = static_cast<double>(dimension);
  for (std::size_t n = 0; n < rotations; ++n) {
    const auto i = static_cast<std::size_t>(stream.uniform01() * d);
    auto j = static_cast<std::size_t>(stream.uniform01() * (d - 1.0));
    if (j >= i) ++j;
    const double angle = 2.0 * std::numbers::pi * stream.uniform01() - std::numbers::pi;
    m.rotate_rows(i, j, angle);
  }
  return m;
}

void write_rotation(const RotationMatrix& matrix, std::ostream& out) {
  const std::size_t d = matrix.dimension();
  out << d << '\n';
  char buf[40];
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", matrix(r, c));
      out << (c ? " " : "") << buf;
    }
    out << '\n';
  }
}

RotationMatrix read_rotation(std::istream& in) {
  std::size_t d = 0;
  if (!(in >> d) || d == 0) throw ConfigError("rotation file: bad dimension line");
  std::vector<double> e(d * d);
  for (double& v : e) {
    if (!(in >> v)) throw ConfigError("rotation file: truncated matrix");
  }
  return RotationMatrix(d, std::move(e));
}

void save_rotation(const RotationMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write rotation file " + path);
  write_rotation(matrix, out);
}

RotationMatrix load_rotation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read rotation file " + path);
  return read_rotation(in);
}

}  // namespace pocsa
