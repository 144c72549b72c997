#pragma once

#include <filesystem>

#include "segnoise/grid.hpp"

namespace segnoise {

enum class NpyDtype {
  Float64,  // '<f8'
  UInt8,    // '|u1' (binary grids only)
};

/// Reads an NPY v1.0 file: C-order, dtype '<f8' or '|u1' (bytes widen to
/// doubles), 1 to 3 dimensions. Anything else is an Error.
Grid read_npy(const std::filesystem::path& path);

/// Writes NPY v1.0, C-order. UInt8 requires every entry to be exactly 0 or 1.
void write_npy(const std::filesystem::path& path, const Grid& g,
               NpyDtype dtype = NpyDtype::Float64);

}  // namespace segnoise
