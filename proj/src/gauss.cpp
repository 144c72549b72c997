#include "segnoise/gauss.hpp"

#include <algorithm>
#include <cmath>

namespace segnoise {

GaussianKernel1D build_kernel(double sigma, double truncate) {
  if (!(sigma > 0.0)) throw NonPositiveSigma("kernel sigma must be > 0, got " + std::to_string(sigma));
  if (!(truncate > 0.0)) throw Error("truncate must be > 0");

  GaussianKernel1D k;
  k.sigma = sigma;
  k.radius = static_cast<std::size_t>(std::ceil(truncate * sigma));
  k.weights.assign(2 * k.radius + 1, 0.0);

  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  double sum = 0.0;
  for (std::size_t j = 0; j <= k.radius; ++j) {
    const double w = std::exp(-static_cast<double>(j * j) * inv2s2);
    // mirror so symmetry holds bitwise
    k.weights[k.radius + j] = w;
    k.weights[k.radius - j] = w;
    sum += (j == 0) ? w : 2.0 * w;
  }
  for (double& w : k.weights) w /= sum;
  return k;
}

namespace {

// One axis pass: each line along `axis` is gathered into a scratch buffer and
// convolved with the kernel taps.
void convolve_axis(const std::vector<double>& in, std::vector<double>& out,
                   const std::vector<std::size_t>& shape, std::size_t axis,
                   const GaussianKernel1D& kernel, Boundary boundary) {
  const std::size_t len = shape[axis];
  std::size_t inner = 1;
  for (std::size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
  const std::size_t outer = in.size() / (len * inner);
  const std::ptrdiff_t r = static_cast<std::ptrdiff_t>(kernel.radius);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(len);

  std::vector<double> line(len);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < inner; ++i) {
      const std::size_t base = o * len * inner + i;
      for (std::size_t p = 0; p < len; ++p) line[p] = in[base + p * inner];

      for (std::ptrdiff_t p = 0; p < n; ++p) {
        double acc = 0.0;
        if (boundary == Boundary::ZeroPad) {
          const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(-r, -p);
          const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(r, n - 1 - p);
          for (std::ptrdiff_t k = lo; k <= hi; ++k)
            acc += kernel.weights[static_cast<std::size_t>(k + r)] * line[static_cast<std::size_t>(p + k)];
        } else {
          for (std::ptrdiff_t k = -r; k <= r; ++k) {
            const std::ptrdiff_t q = std::clamp<std::ptrdiff_t>(p + k, 0, n - 1);
            acc += kernel.weights[static_cast<std::size_t>(k + r)] * line[static_cast<std::size_t>(q)];
          }
        }
        out[base + static_cast<std::size_t>(p) * inner] = acc;
      }
    }
  }
}

}  // namespace

Grid filter_separable(const Grid& g, std::span<const double> sigmas, Boundary boundary) {
  if (sigmas.size() != g.rank())
    throw ShapeMismatch("need one sigma per axis: got " + std::to_string(sigmas.size()) +
                        " for rank " + std::to_string(g.rank()));
  for (double s : sigmas) {
    if (s < 0.0) throw NonPositiveSigma("per-axis sigma must be >= 0");
  }

  std::vector<double> cur(g.values().begin(), g.values().end());
  std::vector<double> next(cur.size());
  for (std::size_t axis = 0; axis < g.rank(); ++axis) {
    if (sigmas[axis] == 0.0) continue;  // identity along this axis
    const GaussianKernel1D kernel = build_kernel(sigmas[axis], 4.0);
    convolve_axis(cur, next, g.shape(), axis, kernel, boundary);
    cur.swap(next);
  }
  return Grid(g.shape(), std::move(cur));
}

}  // namespace segnoise
