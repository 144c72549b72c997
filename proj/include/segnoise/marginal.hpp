#pragma once

#include "segnoise/grid.hpp"

namespace segnoise {

/// Volume accounting for the noisy segmentation: the expected volume equals
/// the clean volume minus the boundary leakage xi (label mass expected to
/// deform out of the unit cube).
struct VolumeReport {
  double volume_clean = 0.0;     // ||l||_1
  double volume_expected = 0.0;  // E ||L||_1
  double xi = 0.0;               // volume_clean - volume_expected
};

/// Closed-form per-voxel foreground probability of the noisy segmentation:
/// zero-pad Gaussian filtering of l with per-axis sigma = a * shape[axis]
/// voxels. Output clamped to [0,1]; the clamp only absorbs rounding noise.
MarginalGrid compute_marginal(const SegmentationGrid& l, double a);

/// Expected-volume report; xi is the zero-pad filter mass deficit, which in
/// the discrete setting is exactly the out-of-domain leakage integral.
VolumeReport expected_volume(const SegmentationGrid& l, double a);

}  // namespace segnoise
