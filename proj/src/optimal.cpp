#include "segnoise/optimal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace segnoise {

SegmentationGrid accuracy_optimal(const MarginalGrid& m) {
  const auto vals = m.grid().values();
  std::vector<double> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) out[i] = (vals[i] >= 0.5) ? 1.0 : 0.0;
  return SegmentationGrid(Grid(m.grid().shape(), std::move(out)));
}

DiceOptimum dice_optimal(const MarginalGrid& m) {
  const auto vals = m.grid().values();
  double sum_m = 0.0;
  for (double v : vals) sum_m += v;
  if (sum_m == 0.0) throw EmptyMarginal();

  std::vector<double> psi(vals.begin(), vals.end());
  std::stable_sort(psi.begin(), psi.end(), std::greater<double>());

  double best = 0.0;
  double cum = 0.0;
  for (std::size_t k = 1; k <= psi.size(); ++k) {
    cum += psi[k - 1];
    const double d = 2.0 * cum / (sum_m + static_cast<double>(k));
    if (d > best) best = d;
  }

  const double threshold = best / 2;
  std::vector<double> seg(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) seg[i] = (vals[i] >= threshold) ? 1.0 : 0.0;

  return DiceOptimum{SegmentationGrid(Grid(m.grid().shape(), std::move(seg))), threshold, best};
}

std::pair<SegmentationGrid, double> brute_force_dice_optimal(const MarginalGrid& m) {
  const auto vals = m.grid().values();
  const std::size_t n = vals.size();
  if (n > 20) throw TooLarge("exhaustive search limited to 20 voxels, got " + std::to_string(n));

  double sum_m = 0.0;
  for (double v : vals) sum_m += v;

  double best = -1.0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (mask == 0 && sum_m == 0.0) continue;  // degenerate denominator
    double inter = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) inter += vals[i];
    }
    const double d = 2.0 * inter / (static_cast<double>(std::popcount(mask)) + sum_m);
    if (d > best) {
      best = d;
      best_mask = mask;
    }
  }

  std::vector<double> seg(n);
  for (std::size_t i = 0; i < n; ++i) seg[i] = ((best_mask >> i) & 1u) ? 1.0 : 0.0;
  return {SegmentationGrid(Grid(m.grid().shape(), std::move(seg))), best};
}

DiceOptimum recover_soft_dice_optimum(const MarginalGrid& ce_optimum) {
  // The converged cross-entropy prediction is the marginal itself; its
  // Dice-optimal thresholding is a soft-Dice optimum.
  return dice_optimal(ce_optimum);
}

}  // namespace segnoise
