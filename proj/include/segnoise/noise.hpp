#pragma once

#include <cstdint>
#include <vector>

#include "segnoise/grid.hpp"

namespace segnoise {

/// Default length scale used throughout the verification suite: 0.15/sqrt(2).
inline constexpr double kDefaultLengthScale = 0.10606601717798213;

/// Squared-exponential kernel parameters in unit-cube coordinates: amplitude a
/// (expected deformation magnitude) and length scale b (smoothness), plus the
/// base seed for the deterministic sampler.
struct NoiseParams {
  double a = 0.0;
  double b = kDefaultLengthScale;
  std::uint64_t seed = 0;
};

/// Draws one Gaussian-field displacement channel per axis: i.i.d. standard
/// normals per voxel (channel c seeded with derive_seed(seed, c)), zero-pad
/// Gaussian filtering with per-axis sigma = b * shape[axis] / sqrt(2), then a
/// per-channel scale (a * shape[c]) * (2 pi (b * shape[c])^2)^(n/4).
/// The result is in voxel units; its per-voxel stddev away from the boundary
/// is a * shape[c].
DisplacementField sample_displacement_field(const std::vector<std::size_t>& shape,
                                            const NoiseParams& params);

/// Resamples l at index + displacement by multilinear interpolation with
/// coordinates clamped to the grid (replicate boundary); interpolated values
/// v >= 0.5 round to foreground.
SegmentationGrid apply_deformation(const SegmentationGrid& l, const DisplacementField& d);

/// One random draw of the noisy segmentation: deform l by a sampled field.
SegmentationGrid sample_noisy_segmentation(const SegmentationGrid& l, const NoiseParams& params);

}  // namespace segnoise
