#pragma once

#include <filesystem>

#include "segnoise/grid.hpp"

namespace segnoise {

/// Writes a 2D grid as binary PGM (P5, maxval 255), scaling linearly so the
/// grid minimum maps to 0 and the maximum to 255; constant grids map to 0.
/// Axis 0 runs top to bottom, axis 1 left to right.
void write_pgm(const std::filesystem::path& path, const Grid& g);

}  // namespace segnoise
