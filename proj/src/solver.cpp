// spinlight - time-harmonic helicity modes in the rotating medium

#include "spinlight/solver.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <vector>

#include "spinlight/errors.hpp"
#include "spinlight/numeric.hpp"
#include "fd_detail.hpp"

namespace spinlight {

namespace {

void require_mode(const HelicityMode& mode) {
  require_helicity(mode.helicity);
  require_medium(mode.medium);
  if (!(mode.omega > 0.0)) throw InvalidInputError("mode requires omega > 0");
}

void warn_fast_rotation(double omega, double omega_frame) {
  if (std::abs(omega_frame) > 1e-3 * omega)
    std::cerr << "spinlight: warning: |Omega|/omega = "
              << std::abs(omega_frame) / omega
              << " exceeds 1e-3; first-order dispersion may be inaccurate\n";
}

}  // namespace

cplx zeta_profile(const HelicityMode& mode, double x, double y,
                  const Constants& k) {
  require_mode(mode);
  const double s = mode.helicity;
  const cplx i_unit(0.0, 1.0);
  const double pref = mode.medium.refractive_index() * mode.omega_frame / k.c;
  return s * i_unit * pref * mode.eta * cplx(x, s * y);
}

CVec3 ansatz_field(const HelicityMode& mode, const Event& at, const Constants& k) {
  require_mode(mode);
  const double s = mode.helicity;
  const cplx i_unit(0.0, 1.0);
  const cplx phase = std::exp(i_unit * mode.k * at.z);
  CVec3 f;
  f.x = mode.eta * phase;
  f.y = s * i_unit * mode.eta * phase;
  f.z = zeta_profile(mode, at.x, at.y, k) * phase;
  return f;
}

double dispersion_axial(double omega, double omega_z, const MediumParams& m,
                        int helicity, const Constants& k) {
  require_helicity(helicity);
  require_medium(m);
  if (!(omega > 0.0)) throw InvalidInputError("omega must be positive");
  warn_fast_rotation(omega, omega_z);
  return m.refractive_index() * (omega + helicity * omega_z) / k.c;
}

double dispersion_oblique(double omega, const Vec3& omega_vec, const Vec3& n_hat,
                          int helicity, const Constants& k) {
  require_helicity(helicity);
  if (!(omega > 0.0)) throw InvalidInputError("omega must be positive");
  if (std::abs(norm(n_hat) - 1.0) > 1e-12)
    throw InvalidInputError("n_hat must be a unit vector");
  warn_fast_rotation(omega, norm(omega_vec));
  return (omega + helicity * dot(n_hat, omega_vec)) / k.c;
}

void require_grid_in_rotating_region(const GridSpec& grid, double omega_z,
                                     const Constants& k) {
  if (omega_z == 0.0) return;
  const double limit = 0.1 * k.c / std::abs(omega_z);
  if (grid_max_cylinder_radius(grid) >= limit)
    throw DomainError("grid extends beyond 0.1 c/Omega from the rotation axis");
}

namespace {

struct SampledTensors {
  std::vector<Mat3> xi;
  std::vector<Vec3> gyration;
};

SampledTensors sample_tensors(const TensorFunction& ct_field, const GridSpec& g) {
  SampledTensors out;
  const std::size_t total =
      static_cast<std::size_t>(g.points[0]) * g.points[1] * g.points[2];
  out.xi.resize(total);
  out.gyration.resize(total);
  std::size_t idx = 0;
  for (int i = 0; i < g.points[0]; ++i)
    for (int j = 0; j < g.points[1]; ++j)
      for (int kk = 0; kk < g.points[2]; ++kk, ++idx) {
        const ConstitutiveTensors ct = ct_field(grid_point(g, i, j, kk));
        out.xi[idx] = ct.xi;
        out.gyration[idx] = ct.gyration;
      }
  return out;
}

detail::Norms curl_residual_norms(const FieldFunction& field, int helicity,
                                  double omega, const SampledTensors& tensors,
                                  const GridSpec& grid) {
  const detail::SampledField sf = detail::sample_field(field, grid);
  const double s = helicity;
  const cplx i_omega(0.0, omega);
  const int ny = grid.points[1], nz = grid.points[2];
  return detail::interior_norms(sf.n, [&](int i, int j, int kk) {
    const std::size_t idx = (static_cast<std::size_t>(i) * ny + j) * nz + kk;
    const CVec3& F = sf.at(i, j, kk);
    const CVec3 r = detail::fd_curl(sf, i, j, kk) -
                    cplx(s * omega) * (tensors.xi[idx] * F) -
                    i_omega * cross(tensors.gyration[idx], F);
    return norm(r);
  });
}

}  // namespace

ResidualReport curl_residual(const FieldFunction& field, int helicity,
                             double omega, const TensorFunction& ct_field,
                             const GridSpec& grid, double omega_frame,
                             const Constants& k) {
  require_helicity(helicity);
  if (!(omega > 0.0)) throw InvalidInputError("omega must be positive");
  require_grid(grid);
  require_grid_in_rotating_region(grid, omega_frame, k);

  const SampledTensors coarse = sample_tensors(ct_field, grid);
  const detail::Norms n0 = curl_residual_norms(field, helicity, omega, coarse, grid);

  const GridSpec fine_grid = detail::refined(grid);
  const SampledTensors fine = sample_tensors(ct_field, fine_grid);
  const detail::Norms n1 = curl_residual_norms(field, helicity, omega, fine, fine_grid);

  ResidualReport rep;
  rep.max_norm = n0.max_norm;
  rep.l2_norm = n0.l2_norm;
  if (n0.l2_norm > 0.0 && n1.l2_norm > 0.0)
    rep.order_estimate = std::log2(n0.l2_norm / n1.l2_norm);
  return rep;
}

ResidualReport divergence_residual(const FieldFunction& Z, const GridSpec& grid) {
  require_grid(grid);
  const auto norms_on = [&](const GridSpec& g) {
    const detail::SampledField sf = detail::sample_field(Z, g);
    return detail::interior_norms(sf.n, [&](int i, int j, int kk) {
      return std::abs(detail::fd_divergence(sf, i, j, kk));
    });
  };
  const detail::Norms n0 = norms_on(grid);
  const detail::Norms n1 = norms_on(detail::refined(grid));
  ResidualReport rep;
  rep.max_norm = n0.max_norm;
  rep.l2_norm = n0.l2_norm;
  if (n0.l2_norm > 0.0 && n1.l2_norm > 0.0)
    rep.order_estimate = std::log2(n0.l2_norm / n1.l2_norm);
  return rep;
}

GridSpec dispersion_recovery_grid(double omega, const MediumParams& m,
                                  const Constants& k, int points) {
  require_medium(m);
  if (!(omega > 0.0)) throw InvalidInputError("omega must be positive");
  const double k_est = m.refractive_index() * omega / k.c;
  // k dz ~ 1e-5 balances the (k dz)^2/6 phase bias of the central stencil
  // against the eps/(k dz) cancellation noise of the difference.
  const double dz = 1e-5 / k_est;
  GridSpec g;
  g.points = {points, points, points};
  const double half = 0.5 * (points - 1) * dz;
  g.half_extent = {half, half, half};
  return g;
}

double dispersion_recover(double omega, double omega_z, const MediumParams& m,
                          int helicity, const GridSpec& grid,
                          const Constants& k) {
  require_helicity(helicity);
  require_medium(m);
  if (!(omega > 0.0)) throw InvalidInputError("omega must be positive");
  require_grid(grid);
  require_grid_in_rotating_region(grid, omega_z, k);

  const double n = m.refractive_index();
  const double k_center = n * omega / k.c;
  if (omega_z == 0.0) return k_center;  // degenerate scan window

  const double k_lo = n * (omega - 4.0 * std::abs(omega_z)) / k.c;
  const double k_hi = n * (omega + 4.0 * std::abs(omega_z)) / k.c;

  const TensorFunction tensors = [&](const Vec3& r) {
    return rotating_constitutive_linear(Vec3{0.0, 0.0, omega_z}, m,
                                        Event{0.0, r.x, r.y, r.z}, k);
  };
  const SampledTensors sampled = sample_tensors(tensors, grid);

  const auto residual_l2 = [&](double k_trial) {
    HelicityMode mode{helicity, omega, k_trial, 1.0, m, omega_z};
    const FieldFunction f = [&](const Vec3& r) {
      return ansatz_field(mode, Event{0.0, r.x, r.y, r.z}, k);
    };
    return curl_residual_norms(f, helicity, omega, sampled, grid).l2_norm;
  };

  // Coarse scan; ties resolved toward the window center so a numerically
  // flat window settles mid-window instead of at an edge.
  constexpr int kScanSamples = 33;
  std::vector<double> ks(kScanSamples), res(kScanSamples);
  for (int i = 0; i < kScanSamples; ++i) {
    ks[i] = k_lo + (k_hi - k_lo) * i / (kScanSamples - 1);
    res[i] = residual_l2(ks[i]);
  }
  int best = kScanSamples / 2;
  for (int off = 1; off <= kScanSamples / 2; ++off) {
    for (int i : {kScanSamples / 2 - off, kScanSamples / 2 + off}) {
      if (i >= 0 && i < kScanSamples && res[i] < res[best]) best = i;
    }
  }

  const Vec3 h = grid_spacing(grid);
  const double kdz = k_center * h.z;
  const double resolution_floor =
      kdz * kdz / 6.0 + 4.0 * std::numeric_limits<double>::epsilon() / kdz;
  const double window_halfwidth_rel = 4.0 * std::abs(omega_z) / omega;
  const bool window_resolvable = window_halfwidth_rel > 10.0 * resolution_floor;

  if (window_resolvable && scan_pinned_at_boundary(res, best))
    throw NumericalError(
        "dispersion scan pinned at the window boundary; "
        "check sign conventions of the residual operator");

  const double a = ks[std::max(0, best - 1)];
  const double b = ks[std::min(kScanSamples - 1, best + 1)];
  return golden_section_min(residual_l2, a, b, 1e-12).x;
}

}  // namespace spinlight
