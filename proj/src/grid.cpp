#include "segnoise/grid.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace segnoise {

namespace {

std::size_t checked_size(const std::vector<std::size_t>& shape) {
  if (shape.empty()) throw EmptyShape();
  if (shape.size() > 3)
    throw Error("only 1 to 3 axes are supported, got rank " + std::to_string(shape.size()));
  std::size_t n = 1;
  for (std::size_t s : shape) {
    if (s == 0) throw Error("axis sizes must be positive");
    n *= s;
  }
  return n;
}

}  // namespace

Grid::Grid(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  const std::size_t n = checked_size(shape_);
  if (data_.size() != n)
    throw Error("data length " + std::to_string(data_.size()) + " does not match shape product " +
                std::to_string(n));
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i]))
      throw Error("non-finite entry at flat index " + std::to_string(i));
  }
}

Grid Grid::filled(std::vector<std::size_t> shape, double value) {
  const std::size_t n = checked_size(shape);
  return Grid(std::move(shape), std::vector<double>(n, value));
}

Grid Grid::zeros(std::vector<std::size_t> shape) { return filled(std::move(shape), 0.0); }

std::vector<std::size_t> Grid::strides() const {
  std::vector<std::size_t> s(shape_.size(), 1);
  for (std::size_t i = shape_.size(); i-- > 1;) s[i - 1] = s[i] * shape_[i];
  return s;
}

SegmentationGrid::SegmentationGrid(Grid g) : grid_(std::move(g)) {
  const auto vals = grid_.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] != 0.0 && vals[i] != 1.0) throw NonBinaryValue(i, vals[i]);
  }
}

MarginalGrid::MarginalGrid(Grid g) : grid_(std::move(g)) {
  const auto vals = grid_.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < 0.0 || vals[i] > 1.0) throw OutOfRange(i, vals[i]);
  }
}

DisplacementField::DisplacementField(std::vector<Grid> channels) : channels_(std::move(channels)) {
  if (channels_.empty()) throw Error("displacement field needs at least one channel");
  const auto& shape = channels_.front().shape();
  if (channels_.size() != shape.size())
    throw ShapeMismatch("displacement field must have one channel per axis: got " +
                        std::to_string(channels_.size()) + " channels for rank " +
                        std::to_string(shape.size()));
  for (const Grid& c : channels_) {
    if (c.shape() != shape) throw ShapeMismatch("displacement channels must share one shape");
  }
}

SegmentationGrid validate_segmentation(Grid g) { return SegmentationGrid(std::move(g)); }

MarginalGrid validate_marginal(Grid g) { return MarginalGrid(std::move(g)); }

double voxel_measure(const std::vector<std::size_t>& shape) {
  if (shape.empty()) throw EmptyShape();
  double product = 1.0;
  for (std::size_t s : shape) product *= static_cast<double>(s);
  return 1.0 / product;
}

double mean(const Grid& g) {
  const auto vals = g.values();
  double sum = 0.0;
  for (double v : vals) sum += v;
  return sum / static_cast<double>(vals.size());
}

}  // namespace segnoise
