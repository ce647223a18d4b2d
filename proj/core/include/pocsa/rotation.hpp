#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pocsa {

/// Dense row-major orthogonal D x D matrix.
class RotationMatrix {
 public:
  RotationMatrix() = default;
  RotationMatrix(std::size_t dimension, std::vector<double> entries,
                 std::uint64_t seed = 0);

  static RotationMatrix identity(std::size_t dimension, std::uint64_t seed = 0);

  /// Givens rotation by `angle` in the (i, j) plane:
  /// M(i,i) = M(j,j) = cos, M(i,j) = -sin, M(j,i) = sin.
  static RotationMatrix planar(std::size_t dimension, std::size_t i,
                               std::size_t j, double angle);

  std::size_t dimension() const noexcept { return dimension_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::span<const double> entries() const noexcept { return entries_; }

  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dimension_ + col];
  }

  /// out = M x.
  void apply(std::span<const double> x, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> x) const;

  /// Left-multiplies by the planar rotation (i, j, angle) in place.
  void rotate_rows(std::size_t i, std::size_t j, double angle);

  RotationMatrix transpose() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<double> entries_;
  std::uint64_t seed_ = 0;
};

/// Product of `rotations` random planar rotations with uniformly drawn axis
/// pairs and angles. rotations == 0 selects 2D - 2 (D for D = 2).
RotationMatrix generate_rotation(std::size_t dimension, std::uint64_t seed,
                                 std::size_t rotations = 0);

/// Text artifact: first line D, then D rows of D entries at 17 significant
/// digits.
void write_rotation(const RotationMatrix& matrix, std::ostream& out);
RotationMatrix read_rotation(std::istream& in);

void save_rotation(const RotationMatrix& matrix, const std::string& path);
RotationMatrix load_rotation(const std::string& path);

}  // namespace pocsa
