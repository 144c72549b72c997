#pragma once

#include <utility>

#include "segnoise/grid.hpp"

namespace segnoise {

/// A Dice-maximizing segmentation together with the threshold that produces
/// it from the marginal. threshold is best_dice / 2 by the same float
/// expression, and segmentation is (m >= threshold) elementwise.
struct DiceOptimum {
  SegmentationGrid segmentation;
  double threshold = 0.0;
  double best_dice = 0.0;
};

/// Accuracy-maximizing segmentation: threshold the marginal at 1/2. Voxels at
/// exactly 1/2 go to foreground (either choice is optimal).
SegmentationGrid accuracy_optimal(const MarginalGrid& m);

/// Dice-maximizing segmentation by the sort-and-cumulative-sum scan: sort the
/// marginal descending, score every top-k prefix with
/// d_k = 2 sum_{j<=k} psi_j / (sum(m) + k), and threshold at max_k d_k / 2.
DiceOptimum dice_optimal(const MarginalGrid& m);

/// Exhaustive Dice maximization over all 2^N binary grids (N <= 20).
/// Test oracle for dice_optimal.
std::pair<SegmentationGrid, double> brute_force_dice_optimal(const MarginalGrid& m);

/// Thresholds a converged cross-entropy prediction (which equals the marginal)
/// at the Dice-optimal threshold, yielding a soft-Dice optimum.
DiceOptimum recover_soft_dice_optimum(const MarginalGrid& ce_optimum);

}  // namespace segnoise
