// spinlight - cartesian evaluation grids and residual reports

#pragma once

#include <array>

#include "spinlight/errors.hpp"
#include "spinlight/linalg.hpp"

namespace spinlight {

// Uniform cartesian box: points[i] nodes per axis spanning
// [center - half_extent, center + half_extent].
struct GridSpec {
  Vec3 center{};
  Vec3 half_extent{};
  std::array<int, 3> points{17, 17, 17};
};

inline Vec3 grid_spacing(const GridSpec& g) {
  return {2.0 * g.half_extent.x / (g.points[0] - 1),
          2.0 * g.half_extent.y / (g.points[1] - 1),
          2.0 * g.half_extent.z / (g.points[2] - 1)};
}

inline Vec3 grid_point(const GridSpec& g, int i, int j, int k) {
  const Vec3 h = grid_spacing(g);
  return {g.center.x - g.half_extent.x + i * h.x,
          g.center.y - g.half_extent.y + j * h.y,
          g.center.z - g.half_extent.z + k * h.z};
}

// Largest cylindrical radius (about the z axis) reached by any grid node.
inline double grid_max_cylinder_radius(const GridSpec& g) {
  const double x = std::abs(g.center.x) + g.half_extent.x;
  const double y = std::abs(g.center.y) + g.half_extent.y;
  return std::sqrt(x * x + y * y);
}

inline void require_grid(const GridSpec& g, int min_points = 5) {
  for (int a = 0; a < 3; ++a)
    if (g.points[a] < min_points)
      throw InvalidInputError("grid too coarse: need at least " +
                              std::to_string(min_points) + " points per axis");
  if (!(g.half_extent.x > 0.0 && g.half_extent.y > 0.0 && g.half_extent.z > 0.0))
    throw InvalidInputError("grid half_extent must be positive on every axis");
}

struct ResidualReport {
  double max_norm = 0.0;
  double l2_norm = 0.0;        // RMS of the pointwise residual magnitude
  double order_estimate = 0.0; // log2(l2(h) / l2(h/2)) from a two-grid comparison
};

}  // namespace spinlight
