#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>

#include "segnoise/grid.hpp"
#include "segnoise/noise.hpp"

namespace segnoise {

enum class MCTarget { Marginal, Variance, Volume, Correlation };

/// Outcome of one Monte Carlo verification run. Sample i always uses sub-seed
/// derive_seed(params.seed, i), so reports are reproducible from (seed, n).
///
/// Errors are absolute for Marginal and Correlation, relative for Variance.
/// For Volume both error fields hold |empirical mean - expected|, tolerance
/// holds the 3-standard-error band, and volume_sample_variance reports the
/// sample variance of ||L||_1 (the soft-label/expected-score equality
/// diagnostic).
struct MCReport {
  MCTarget target = MCTarget::Marginal;
  std::size_t n_samples = 0;
  double max_abs_error = 0.0;
  double mean_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double standard_error = 0.0;
  double volume_sample_variance = 0.0;
  std::optional<Grid> error_grid;
};

/// Per-voxel sample mean over n_samples noisy draws vs compute_marginal.
MCReport verify_marginal(const SegmentationGrid& l, const NoiseParams& params,
                         std::size_t n_samples, double tolerance,
                         bool keep_error_grid = false);

/// Pooled interior variance of each displacement channel vs (a*shape[axis])^2,
/// at 10% relative tolerance. Interior excludes ceil(4 * b * shape[axis])
/// voxels per side, where zero-pad filtering damps the variance; raises
/// InteriorEmpty when nothing is left.
MCReport verify_variance(const std::vector<std::size_t>& shape, const NoiseParams& params,
                         std::size_t n_samples);

/// Sample mean of ||L||_1 vs expected_volume(l, a), passing within 3 standard
/// errors (estimated from the sample variance of the volumes).
MCReport verify_volume(const SegmentationGrid& l, const NoiseParams& params,
                       std::size_t n_samples);

/// Empirical displacement correlation at voxel offsets delta <= 2 b S on a 1D
/// grid vs exp(-delta^2 / (2 (b S)^2)), at 0.05 absolute tolerance.
MCReport verify_correlation(std::size_t size, const NoiseParams& params,
                            std::size_t n_samples);

/// One-row CSV with header; floats at 12 significant digits.
void write_report_csv(std::ostream& out, const MCReport& report);

}  // namespace segnoise
