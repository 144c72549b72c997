#include "segnoise/noise.hpp"

#include <cmath>
#include <numbers>

#include "segnoise/gauss.hpp"
#include "segnoise/rng.hpp"

namespace segnoise {

namespace {

void check_params(const NoiseParams& params) {
  if (params.a < 0.0) throw NegativeAmplitude(params.a);
  if (!(params.b > 0.0))
    throw NonPositiveSigma("noise length scale b must be > 0, got " + std::to_string(params.b));
}

}  // namespace

DisplacementField sample_displacement_field(const std::vector<std::size_t>& shape,
                                            const NoiseParams& params) {
  check_params(params);
  if (shape.empty()) throw EmptyShape();
  const std::size_t n = shape.size();
  const double rank = static_cast<double>(n);

  std::vector<double> sigmas(n);
  for (std::size_t axis = 0; axis < n; ++axis)
    sigmas[axis] = params.b * static_cast<double>(shape[axis]) / std::numbers::sqrt2;

  std::vector<Grid> channels;
  channels.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (params.a == 0.0) {
      channels.push_back(Grid::zeros(shape));
      continue;
    }
    const double scaled_a = params.a * static_cast<double>(shape[c]);
    const double scaled_b = params.b * static_cast<double>(shape[c]);
    const double weight =
        scaled_a * std::pow(2.0 * std::numbers::pi * scaled_b * scaled_b, rank / 4.0);

    NormalSampler normals(derive_seed(params.seed, c));
    std::size_t total = 1;
    for (std::size_t s : shape) total *= s;
    std::vector<double> white(total);
    for (double& v : white) v = normals.next();

    Grid filtered = filter_separable(Grid(shape, std::move(white)), sigmas, Boundary::ZeroPad);
    std::vector<double> scaled(filtered.values().begin(), filtered.values().end());
    for (double& v : scaled) v *= weight;
    channels.emplace_back(shape, std::move(scaled));
  }
  return DisplacementField(std::move(channels));
}

SegmentationGrid apply_deformation(const SegmentationGrid& l, const DisplacementField& d) {
  const Grid& g = l.grid();
  if (d.shape() != g.shape()) throw ShapeMismatch("displacement field shape must match the grid");

  const std::size_t n = g.rank();
  const auto& shape = g.shape();
  const auto strides = g.strides();
  const auto vals = g.values();

  std::vector<double> out(g.size());
  std::size_t idx[3] = {0, 0, 0};
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    // sample position = voxel index + displacement, clamped to the grid
    std::size_t lo[3];
    std::size_t hi[3];
    double frac[3];
    for (std::size_t axis = 0; axis < n; ++axis) {
      double pos = static_cast<double>(idx[axis]) + d.channels()[axis][flat];
      const double max_pos = static_cast<double>(shape[axis] - 1);
      pos = std::clamp(pos, 0.0, max_pos);
      const double base = std::floor(pos);
      lo[axis] = static_cast<std::size_t>(base);
      hi[axis] = std::min(lo[axis] + 1, shape[axis] - 1);
      frac[axis] = pos - base;
    }

    double v = 0.0;
    for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
      double w = 1.0;
      std::size_t at = 0;
      for (std::size_t axis = 0; axis < n; ++axis) {
        const bool high = (corner >> axis) & 1u;
        w *= high ? frac[axis] : 1.0 - frac[axis];
        at += (high ? hi[axis] : lo[axis]) * strides[axis];
      }
      if (w != 0.0) v += w * vals[at];
    }
    out[flat] = (v >= 0.5) ? 1.0 : 0.0;

    for (std::size_t axis = n; axis-- > 0;) {
      if (++idx[axis] < shape[axis]) break;
      idx[axis] = 0;
    }
  }
  return SegmentationGrid(Grid(shape, std::move(out)));
}

SegmentationGrid sample_noisy_segmentation(const SegmentationGrid& l, const NoiseParams& params) {
  return apply_deformation(l, sample_displacement_field(l.grid().shape(), params));
}

}  // namespace segnoise
