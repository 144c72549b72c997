#include "segnoise/marginal.hpp"

#include <algorithm>
#include <vector>

#include "segnoise/gauss.hpp"

namespace segnoise {

MarginalGrid compute_marginal(const SegmentationGrid& l, double a) {
  if (a < 0.0) throw NegativeAmplitude(a);
  const Grid& g = l.grid();
  if (a == 0.0) return MarginalGrid(g);  // p_{a^2} degenerates to a point mass

  std::vector<double> sigmas(g.rank());
  for (std::size_t axis = 0; axis < g.rank(); ++axis)
    sigmas[axis] = a * static_cast<double>(g.shape()[axis]);

  Grid filtered = filter_separable(g, sigmas, Boundary::ZeroPad);
  std::vector<double> clamped(filtered.values().begin(), filtered.values().end());
  for (double& v : clamped) v = std::clamp(v, 0.0, 1.0);
  return MarginalGrid(Grid(g.shape(), std::move(clamped)));
}

VolumeReport expected_volume(const SegmentationGrid& l, double a) {
  VolumeReport report;
  report.volume_clean = mean(l.grid());
  report.volume_expected = mean(compute_marginal(l, a).grid());
  report.xi = report.volume_clean - report.volume_expected;
  return report;
}

}  // namespace segnoise
