#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "segnoise/errors.hpp"

namespace segnoise {

/// Dense scalar field over the discretized unit cube, 1 to 3 axes, row-major
/// storage (last axis fastest). Voxel i along an axis of size S covers the
/// unit-cube coordinate (i + 0.5) / S. Immutable after construction.
class Grid {
 public:
  Grid(std::vector<std::size_t> shape, std::vector<double> data);

  static Grid filled(std::vector<std::size_t> shape, double value);
  static Grid zeros(std::vector<std::size_t> shape);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::span<const double> values() const { return data_; }
  double operator[](std::size_t flat) const { return data_[flat]; }

  /// Row-major strides, in elements.
  std::vector<std::size_t> strides() const;

  bool same_shape(const Grid& other) const { return shape_ == other.shape_; }

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// Binary-valued grid (entries exactly 0 or 1).
class SegmentationGrid {
 public:
  explicit SegmentationGrid(Grid g);
  const Grid& grid() const { return grid_; }

 private:
  Grid grid_;
};

/// [0,1]-valued grid (marginal functions and soft predictions).
class MarginalGrid {
 public:
  explicit MarginalGrid(Grid g);
  const Grid& grid() const { return grid_; }

 private:
  Grid grid_;
};

/// Per-voxel displacement vectors in voxel units: one channel per axis.
class DisplacementField {
 public:
  explicit DisplacementField(std::vector<Grid> channels);
  const std::vector<Grid>& channels() const { return channels_; }
  const std::vector<std::size_t>& shape() const { return channels_.front().shape(); }

 private:
  std::vector<Grid> channels_;
};

/// Wraps g, failing with NonBinaryValue unless every entry is exactly 0 or 1.
SegmentationGrid validate_segmentation(Grid g);

/// Wraps g, failing with OutOfRange unless every entry lies in [0,1].
MarginalGrid validate_marginal(Grid g);

/// Lebesgue measure of one voxel under the lambda(unit cube) = 1 convention:
/// 1 / product(shape).
double voxel_measure(const std::vector<std::size_t>& shape);

/// Plain arithmetic mean of all entries (the lambda-integral of the field).
double mean(const Grid& g);

}  // namespace segnoise
