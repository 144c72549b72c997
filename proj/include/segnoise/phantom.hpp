#pragma once

#include <vector>

#include "segnoise/grid.hpp"

namespace segnoise {

enum class PhantomKind { Disk, Annulus, Bar, FigureShape };

/// Analytic binary test shape in unit-cube coordinates. A voxel is foreground
/// iff its center lies inside the shape (no anti-aliasing).
struct PhantomSpec {
  PhantomKind kind = PhantomKind::Disk;
  std::vector<std::size_t> shape;
  std::vector<double> center;    // defaults to the cube center
  double radius = 0.25;          // Disk radius / Annulus outer radius
  double inner_radius = 0.0;     // Annulus only
  std::vector<double> widths;    // Bar: full extent per axis
};

/// FigureShape geometry (2D only): a disk-plus-square body with a convex
/// corner, one interior hole, and a thin protrusion two voxels wide at 128^2.
/// The hole disk is exported so tests and reproductions can address it.
inline constexpr double kFigureHoleCenter[2] = {0.42, 0.58};
inline constexpr double kFigureHoleRadius = 0.05;

SegmentationGrid generate_phantom(const PhantomSpec& spec);

}  // namespace segnoise
