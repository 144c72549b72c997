#include "segnoise/phantom.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace segnoise {

namespace {

struct Geometry {
  PhantomKind kind;
  std::vector<double> center;
  double radius;
  double inner_radius;
  std::vector<double> widths;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw GeometryOutOfBounds(what);
}

void check_geometry(const PhantomSpec& spec, const Geometry& geo) {
  const std::size_t n = spec.shape.size();
  require(geo.center.size() == n, "center must have one coordinate per axis");
  switch (spec.kind) {
    case PhantomKind::Disk:
      require(geo.radius >= 0.0, "radius must be >= 0");
      for (double c : geo.center)
        require(c - geo.radius >= 0.0 && c + geo.radius <= 1.0, "disk leaves the unit cube");
      break;
    case PhantomKind::Annulus:
      require(geo.inner_radius >= 0.0 && geo.inner_radius < geo.radius,
              "annulus needs 0 <= inner radius < outer radius");
      for (double c : geo.center)
        require(c - geo.radius >= 0.0 && c + geo.radius <= 1.0, "annulus leaves the unit cube");
      break;
    case PhantomKind::Bar:
      require(geo.widths.size() == n, "bar needs one width per axis");
      for (std::size_t a = 0; a < n; ++a) {
        require(geo.widths[a] > 0.0, "bar widths must be > 0");
        require(geo.center[a] - geo.widths[a] / 2 >= 0.0 && geo.center[a] + geo.widths[a] / 2 <= 1.0,
                "bar leaves the unit cube");
      }
      break;
    case PhantomKind::FigureShape:
      require(n == 2, "FigureShape is a 2D composite");
      break;
  }
}

double sq_dist(const double* u, const std::vector<double>& c, std::size_t n) {
  double d = 0.0;
  for (std::size_t a = 0; a < n; ++a) d += (u[a] - c[a]) * (u[a] - c[a]);
  return d;
}

bool figure_member(double u0, double u1) {
  // body: disk with a square attached at its lower-right quadrant (convex corner)
  const bool in_disk = (u0 - 0.5) * (u0 - 0.5) + (u1 - 0.5) * (u1 - 0.5) <= 0.28 * 0.28;
  const bool in_box = u0 >= 0.5 && u0 <= 0.82 && u1 >= 0.18 && u1 <= 0.5;
  // protrusion: bar two voxels wide at 128^2, sticking out of the disk top
  const bool in_prot = u0 >= 0.08 && u0 <= 0.23 && u1 >= 0.4921875 && u1 <= 0.5078125;
  const double hole_d = (u0 - kFigureHoleCenter[0]) * (u0 - kFigureHoleCenter[0]) +
                        (u1 - kFigureHoleCenter[1]) * (u1 - kFigureHoleCenter[1]);
  const bool in_hole = hole_d <= kFigureHoleRadius * kFigureHoleRadius;
  return (in_disk || in_box || in_prot) && !in_hole;
}

}  // namespace

SegmentationGrid generate_phantom(const PhantomSpec& spec) {
  const std::size_t n = spec.shape.size();
  if (n == 0) throw EmptyShape();
  if (n > 3) throw Error("phantoms support 1 to 3 axes");

  Geometry geo{spec.kind,
               spec.center.empty() ? std::vector<double>(n, 0.5) : spec.center,
               spec.radius,
               spec.inner_radius,
               spec.widths};
  check_geometry(spec, geo);

  std::size_t total = 1;
  for (std::size_t s : spec.shape) total *= s;

  std::vector<double> out(total);
  std::size_t idx[3] = {0, 0, 0};
  for (std::size_t flat = 0; flat < total; ++flat) {
    double u[3];
    for (std::size_t a = 0; a < n; ++a)
      u[a] = (static_cast<double>(idx[a]) + 0.5) / static_cast<double>(spec.shape[a]);

    bool member = false;
    switch (spec.kind) {
      case PhantomKind::Disk:
        member = sq_dist(u, geo.center, n) <= geo.radius * geo.radius;
        break;
      case PhantomKind::Annulus: {
        const double d = sq_dist(u, geo.center, n);
        member = d <= geo.radius * geo.radius && d > geo.inner_radius * geo.inner_radius;
        break;
      }
      case PhantomKind::Bar: {
        member = true;
        for (std::size_t a = 0; a < n; ++a) {
          if (u[a] < geo.center[a] - geo.widths[a] / 2 || u[a] > geo.center[a] + geo.widths[a] / 2)
            member = false;
        }
        break;
      }
      case PhantomKind::FigureShape:
        member = figure_member(u[0], u[1]);
        break;
    }
    out[flat] = member ? 1.0 : 0.0;

    for (std::size_t a = n; a-- > 0;) {
      if (++idx[a] < spec.shape[a]) break;
      idx[a] = 0;
    }
  }
  return SegmentationGrid(Grid(spec.shape, std::move(out)));
}

}  // namespace segnoise
