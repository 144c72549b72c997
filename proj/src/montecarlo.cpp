#include "segnoise/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <vector>

#include "segnoise/marginal.hpp"
#include "segnoise/rng.hpp"

namespace segnoise {

namespace {

// Compensated accumulator so report numbers do not depend on summation order.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

NoiseParams sub_seeded(const NoiseParams& params, std::size_t i) {
  return NoiseParams{params.a, params.b, derive_seed(params.seed, i)};
}

const char* target_name(MCTarget t) {
  switch (t) {
    case MCTarget::Marginal: return "marginal";
    case MCTarget::Variance: return "variance";
    case MCTarget::Volume: return "volume";
    case MCTarget::Correlation: return "correlation";
  }
  return "?";
}

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

MCReport verify_marginal(const SegmentationGrid& l, const NoiseParams& params,
                         std::size_t n_samples, double tolerance, bool keep_error_grid) {
  if (n_samples < 2) throw Error("verify_marginal needs at least 2 samples");
  const MarginalGrid expected = compute_marginal(l, params.a);
  const std::size_t total = l.grid().size();

  // samples are binary, so per-voxel sums of counts are exact in doubles
  std::vector<double> counts(total, 0.0);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const SegmentationGrid sample = sample_noisy_segmentation(l, sub_seeded(params, i));
    const auto vals = sample.grid().values();
    for (std::size_t v = 0; v < total; ++v) counts[v] += vals[v];
  }

  MCReport report;
  report.target = MCTarget::Marginal;
  report.n_samples = n_samples;
  report.tolerance = tolerance;

  std::vector<double> err(total);
  KahanSum sum_abs;
  for (std::size_t v = 0; v < total; ++v) {
    err[v] = counts[v] / static_cast<double>(n_samples) - expected.grid()[v];
    const double a = std::abs(err[v]);
    if (a > report.max_abs_error) report.max_abs_error = a;
    sum_abs.add(a);
  }
  report.mean_abs_error = sum_abs.value() / static_cast<double>(total);
  report.passed = report.max_abs_error <= tolerance;
  if (keep_error_grid) report.error_grid = Grid(l.grid().shape(), std::move(err));
  return report;
}

MCReport verify_variance(const std::vector<std::size_t>& shape, const NoiseParams& params,
                         std::size_t n_samples) {
  if (n_samples < 2) throw Error("verify_variance needs at least 2 samples");
  if (shape.empty()) throw EmptyShape();
  const std::size_t n = shape.size();

  // Exclude the zero-pad damping zone: ceil(4 b S) voxels per side.
  std::vector<std::size_t> lo(n), hi(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto margin =
        static_cast<std::size_t>(std::ceil(4.0 * params.b * static_cast<double>(shape[a])));
    if (2 * margin >= shape[a])
      throw InteriorEmpty("grid of size " + std::to_string(shape[a]) +
                          " has no interior beyond the boundary margin " + std::to_string(margin));
    lo[a] = margin;
    hi[a] = shape[a] - margin;
  }

  // flat indices of the interior box, enumerated once
  const auto strides = Grid::zeros(shape).strides();
  std::vector<std::size_t> interior;
  {
    std::size_t idx[3] = {0, 0, 0};
    for (std::size_t a = 0; a < n; ++a) idx[a] = lo[a];
    bool more = true;
    while (more) {
      std::size_t flat = 0;
      for (std::size_t a = 0; a < n; ++a) flat += idx[a] * strides[a];
      interior.push_back(flat);
      more = false;
      for (std::size_t a = n; a-- > 0;) {
        if (++idx[a] < hi[a]) {
          more = true;
          break;
        }
        idx[a] = lo[a];
      }
    }
  }

  std::vector<KahanSum> second_moment(n);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const DisplacementField field = sample_displacement_field(shape, sub_seeded(params, i));
    for (std::size_t c = 0; c < n; ++c) {
      const auto x = field.channels()[c].values();
      double s = 0.0;
      for (std::size_t flat : interior) s += x[flat] * x[flat];
      second_moment[c].add(s);
    }
  }
  const std::size_t interior_count = interior.size();

  MCReport report;
  report.target = MCTarget::Variance;
  report.n_samples = n_samples;
  report.tolerance = 0.10;  // relative
  double sum_err = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    const double target = params.a * static_cast<double>(shape[c]);
    const double pooled =
        second_moment[c].value() / (static_cast<double>(n_samples) * static_cast<double>(interior_count));
    const double rel = (params.a == 0.0) ? std::abs(pooled)
                                         : std::abs(pooled - target * target) / (target * target);
    if (rel > report.max_abs_error) report.max_abs_error = rel;
    sum_err += rel;
  }
  report.mean_abs_error = sum_err / static_cast<double>(n);
  report.passed = report.max_abs_error <= report.tolerance;
  return report;
}

MCReport verify_volume(const SegmentationGrid& l, const NoiseParams& params,
                       std::size_t n_samples) {
  if (n_samples < 2) throw Error("verify_volume needs at least 2 samples");
  const VolumeReport expected = expected_volume(l, params.a);

  std::vector<double> volumes(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i)
    volumes[i] = mean(sample_noisy_segmentation(l, sub_seeded(params, i)).grid());

  KahanSum sum;
  for (double v : volumes) sum.add(v);
  const double mean_vol = sum.value() / static_cast<double>(n_samples);

  KahanSum sq;
  for (double v : volumes) sq.add((v - mean_vol) * (v - mean_vol));
  const double sample_var = sq.value() / static_cast<double>(n_samples - 1);
  const double se = std::sqrt(sample_var / static_cast<double>(n_samples));

  MCReport report;
  report.target = MCTarget::Volume;
  report.n_samples = n_samples;
  report.max_abs_error = std::abs(mean_vol - expected.volume_expected);
  report.mean_abs_error = report.max_abs_error;
  report.tolerance = 3.0 * se;
  report.standard_error = se;
  report.volume_sample_variance = sample_var;
  report.passed = report.max_abs_error <= report.tolerance;
  return report;
}

MCReport verify_correlation(std::size_t size, const NoiseParams& params, std::size_t n_samples) {
  if (n_samples < 2) throw Error("verify_correlation needs at least 2 samples");
  if (params.a == 0.0) throw Error("correlation is undefined for a zero-amplitude field");
  const std::vector<std::size_t> shape{size};
  const double scaled_b = params.b * static_cast<double>(size);
  const auto margin = static_cast<std::size_t>(
      std::ceil(4.0 * scaled_b / std::numbers::sqrt2));  // 4 filter sigmas
  const auto max_offset = static_cast<std::size_t>(std::floor(2.0 * scaled_b));
  if (2 * margin + max_offset >= size)
    throw InteriorEmpty("grid of size " + std::to_string(size) +
                        " cannot host interior pairs up to offset " + std::to_string(max_offset));

  std::vector<KahanSum> acc(max_offset + 1);
  std::vector<std::size_t> pair_count(max_offset + 1, 0);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const DisplacementField field = sample_displacement_field(shape, sub_seeded(params, i));
    const auto x = field.channels()[0].values();
    for (std::size_t d = 0; d <= max_offset; ++d) {
      double s = 0.0;
      for (std::size_t p = margin; p + d < size - margin; ++p) s += x[p] * x[p + d];
      acc[d].add(s);
      if (i == 0) pair_count[d] = size - 2 * margin - d;
    }
  }

  MCReport report;
  report.target = MCTarget::Correlation;
  report.n_samples = n_samples;
  report.tolerance = 0.05;
  const double m0 = acc[0].value() / static_cast<double>(n_samples * pair_count[0]);
  KahanSum sum_err;
  for (std::size_t d = 0; d <= max_offset; ++d) {
    const double m2 = acc[d].value() / static_cast<double>(n_samples * pair_count[d]);
    const double rho = m2 / m0;
    const double target =
        std::exp(-static_cast<double>(d * d) / (2.0 * scaled_b * scaled_b));
    const double err = std::abs(rho - target);
    if (err > report.max_abs_error) report.max_abs_error = err;
    sum_err.add(err);
  }
  report.mean_abs_error = sum_err.value() / static_cast<double>(max_offset + 1);
  report.passed = report.max_abs_error <= report.tolerance;
  return report;
}

void write_report_csv(std::ostream& out, const MCReport& report) {
  out << "target,n_samples,max_abs_error,mean_abs_error,tolerance,standard_error,"
         "volume_sample_variance,pass\n";
  out << target_name(report.target) << ',' << report.n_samples << ',' << g12(report.max_abs_error)
      << ',' << g12(report.mean_abs_error) << ',' << g12(report.tolerance) << ','
      << g12(report.standard_error) << ',' << g12(report.volume_sample_variance) << ','
      << (report.passed ? 1 : 0) << '\n';
}

}  // namespace segnoise
