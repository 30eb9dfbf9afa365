// spinlight - internal central-difference stencils over sampled grids

#pragma once

#include <functional>
#include <vector>

#include "spinlight/grid.hpp"
#include "spinlight/linalg.hpp"

namespace spinlight::detail {

using FieldFn = std::function<CVec3(const Vec3&)>;

struct SampledField {
  std::array<int, 3> n{};
  Vec3 h{};
  std::vector<CVec3> values;

  const CVec3& at(int i, int j, int k) const {
    return values[(static_cast<std::size_t>(i) * n[1] + j) * n[2] + k];
  }
};

inline SampledField sample_field(const FieldFn& f, const GridSpec& g) {
  SampledField s;
  s.n = g.points;
  s.h = grid_spacing(g);
  s.values.resize(static_cast<std::size_t>(s.n[0]) * s.n[1] * s.n[2]);
  std::size_t idx = 0;
  for (int i = 0; i < s.n[0]; ++i)
    for (int j = 0; j < s.n[1]; ++j)
      for (int k = 0; k < s.n[2]; ++k) s.values[idx++] = f(grid_point(g, i, j, k));
  return s;
}

// Second-order central-difference curl at an interior node.
inline CVec3 fd_curl(const SampledField& s, int i, int j, int k) {
  const CVec3 dx = (s.at(i + 1, j, k) - s.at(i - 1, j, k)) / cplx(2.0 * s.h.x);
  const CVec3 dy = (s.at(i, j + 1, k) - s.at(i, j - 1, k)) / cplx(2.0 * s.h.y);
  const CVec3 dz = (s.at(i, j, k + 1) - s.at(i, j, k - 1)) / cplx(2.0 * s.h.z);
  return {dy.z - dz.y, dz.x - dx.z, dx.y - dy.x};
}

// Second-order central-difference divergence at an interior node.
inline cplx fd_divergence(const SampledField& s, int i, int j, int k) {
  const cplx dx = (s.at(i + 1, j, k).x - s.at(i - 1, j, k).x) / (2.0 * s.h.x);
  const cplx dy = (s.at(i, j + 1, k).y - s.at(i, j - 1, k).y) / (2.0 * s.h.y);
  const cplx dz = (s.at(i, j, k + 1).z - s.at(i, j, k - 1).z) / (2.0 * s.h.z);
  return dx + dy + dz;
}

struct Norms {
  double max_norm = 0.0;
  double l2_norm = 0.0;
};

// Accumulates max and RMS of |residual(i, j, k)| over interior nodes only;
// boundary faces are excluded so one-sided closure error never enters the
// reported norms.
template <class ResidualMagnitude>
Norms interior_norms(const std::array<int, 3>& n, ResidualMagnitude&& mag) {
  Norms out;
  double sum2 = 0.0;
  std::size_t count = 0;
  for (int i = 1; i + 1 < n[0]; ++i)
    for (int j = 1; j + 1 < n[1]; ++j)
      for (int k = 1; k + 1 < n[2]; ++k) {
        const double r = mag(i, j, k);
        out.max_norm = std::max(out.max_norm, r);
        sum2 += r * r;
        ++count;
      }
  if (count > 0) out.l2_norm = std::sqrt(sum2 / static_cast<double>(count));
  return out;
}

// Grid with the same extent and halved spacing (2n - 1 nodes per axis).
inline GridSpec refined(const GridSpec& g) {
  GridSpec r = g;
  for (int a = 0; a < 3; ++a) r.points[a] = 2 * g.points[a] - 1;
  return r;
}

}  // namespace spinlight::detail
