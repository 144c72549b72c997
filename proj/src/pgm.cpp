#include "segnoise/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

namespace segnoise {

void write_pgm(const std::filesystem::path& path, const Grid& g) {
  if (g.rank() != 2) throw Error("PGM export needs a 2D grid, got rank " + std::to_string(g.rank()));

  const auto vals = g.values();
  const auto [lo_it, hi_it] = std::minmax_element(vals.begin(), vals.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double scale = (hi > lo) ? 255.0 / (hi - lo) : 0.0;  // constant grids map to 0

  std::vector<unsigned char> bytes(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const auto v = static_cast<long>(std::llround((vals[i] - lo) * scale));
    bytes[i] = static_cast<unsigned char>(std::clamp(v, 0L, 255L));
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "P5\n" << g.shape()[1] << ' ' << g.shape()[0] << "\n255\n";
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace segnoise
