#pragma once

#include "segnoise/grid.hpp"

namespace segnoise {

enum class MetricKind { CrossEntropy, SoftDice, Accuracy, Dice };

struct MetricValue {
  double value = 0.0;
  MetricKind kind = MetricKind::CrossEntropy;
};

/// All four functionals integrate with voxel-mean weights, realizing
/// lambda(unit cube) = 1. m is the (soft) label; c a soft prediction; s a
/// binary segmentation.

/// -mean(m log c + (1-m) log(1-c)) with c clamped to [1e-12, 1 - 1e-12].
MetricValue cross_entropy(const MarginalGrid& m, const MarginalGrid& c);

/// 1 - 2 mean(c m) / (mean(c) + mean(m)).
MetricValue soft_dice(const MarginalGrid& m, const MarginalGrid& c);

/// mean(s m + (1-s)(1-m)): fraction of the domain labeled correctly.
MetricValue accuracy(const MarginalGrid& m, const SegmentationGrid& s);

/// 2 mean(s m) / (mean(s) + mean(m)).
MetricValue dice(const MarginalGrid& m, const SegmentationGrid& s);

}  // namespace segnoise
