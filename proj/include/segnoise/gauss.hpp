#pragma once

#include <span>
#include <vector>

#include "segnoise/grid.hpp"

namespace segnoise {

/// Normalized 1D Gaussian tap set, truncated at radius = ceil(truncate * sigma).
/// weights[k] is proportional to exp(-(k - radius)^2 / (2 sigma^2)); the taps
/// are exactly symmetric and sum to 1 after truncation.
struct GaussianKernel1D {
  double sigma = 0.0;            // voxel units
  std::size_t radius = 0;        // ceil(truncate * sigma)
  std::vector<double> weights;   // 2 * radius + 1 taps
};

/// How samples outside the grid are treated during filtering.
enum class Boundary {
  ZeroPad,           // out-of-range samples read as 0
  ReplicateNearest,  // out-of-range samples read the nearest edge value
};

GaussianKernel1D build_kernel(double sigma, double truncate = 4.0);

/// Convolves g along each axis in turn with build_kernel(sigmas[axis], 4.0).
/// sigma = 0 on an axis leaves that axis untouched.
Grid filter_separable(const Grid& g, std::span<const double> sigmas, Boundary boundary);

}  // namespace segnoise
