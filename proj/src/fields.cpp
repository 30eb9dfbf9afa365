// spinlight - electromagnetic fields, helicity plane waves, generalized
// Riemann-Silberstein combinations

#include "spinlight/fields.hpp"

#include <cmath>

#include "spinlight/errors.hpp"
#include "fd_detail.hpp"

namespace spinlight {

void require_helicity(int helicity) {
  if (helicity != 1 && helicity != -1)
    throw InvalidInputError("helicity must be +1 or -1");
}

void require_plane_wave(const PlaneWave& w) {
  if (!(w.omega0 > 0.0) || !std::isfinite(w.omega0))
    throw InvalidInputError("plane wave requires omega0 > 0");
  require_helicity(w.helicity);
  if (std::abs(norm(w.axis) - 1.0) > 1e-12)
    throw InvalidInputError("plane wave axis must be a unit vector");
}

std::array<Vec3, 3> propagation_triad(const Vec3& axis) {
  const Vec3 d3 = normalized(axis);
  // Seed with the coordinate axis least aligned with d3; ties prefer e_x so
  // the canonical axis e_z yields the triad (e_x, e_y, e_z).
  const double ax = std::abs(d3.x), ay = std::abs(d3.y), az = std::abs(d3.z);
  Vec3 seed{1.0, 0.0, 0.0};
  if (!(ax <= ay && ax <= az)) {
    if (ay <= az)
      seed = {0.0, 1.0, 0.0};
    else
      seed = {0.0, 0.0, 1.0};
  }
  const Vec3 d1 = normalized(seed - dot(seed, d3) * d3);
  const Vec3 d2 = cross(d3, d1);
  return {d1, d2, d3};
}

FieldTriplets plane_wave_fields(const PlaneWave& w, const Event& at,
                                const Constants& k) {
  require_plane_wave(w);
  if (!is_finite(at)) throw InvalidInputError("event has non-finite components");
  const auto [d1, d2, d3] = propagation_triad(w.axis);
  const double s = w.helicity;
  const cplx i_unit(0.0, 1.0);
  const double along = dot(d3, at.position());
  const cplx phase = std::exp(-i_unit * w.omega0 * (at.t - along / k.c));

  const CVec3 circ = CVec3(d1) + s * i_unit * CVec3(d2);
  FieldTriplets f;
  f.E = w.amplitude * phase * circ;
  f.B = (-s * i_unit * w.amplitude / k.c) * phase * circ;
  f.D = k.eps0 * f.E;
  f.H = (1.0 / k.mu0) * f.B;
  return f;
}

RSVectors rs_compose(const FieldTriplets& f, double lambda) {
  if (!(lambda > 0.0)) throw InvalidInputError("lambda must be positive");
  const cplx i_unit(0.0, 1.0);
  RSVectors rs;
  rs.F_plus = lambda * f.E + i_unit * f.H;
  rs.F_minus = lambda * f.E - i_unit * f.H;
  rs.Z_plus = f.D + i_unit * lambda * f.B;
  rs.Z_minus = f.D - i_unit * lambda * f.B;
  return rs;
}

FieldTriplets rs_decompose(const RSVectors& rs, double lambda) {
  if (!(lambda > 0.0)) throw InvalidInputError("lambda must be positive");
  const cplx two_i(0.0, 2.0);
  FieldTriplets f;
  f.E = (rs.F_plus + rs.F_minus) / cplx(2.0 * lambda);
  f.H = (rs.F_plus - rs.F_minus) / two_i;
  f.D = (rs.Z_plus + rs.Z_minus) / cplx(2.0);
  f.B = (rs.Z_plus - rs.Z_minus) / (two_i * lambda);
  return f;
}

CVec3 rs_constitutive(const CVec3& F, int sign, const ConstitutiveTensors& ct) {
  require_helicity(sign);
  const cplx i_unit(0.0, 1.0);
  return ct.xi * F + static_cast<double>(sign) * i_unit * cross(ct.gyration, F);
}

namespace {

ResidualReport curl_eigen_norms(const PlaneWave& w, const GridSpec& grid,
                                const Constants& k) {
  const double s = w.helicity;
  const double lambda0 = impedance_lambda(MediumParams{1.0, 1.0}, k);
  const detail::FieldFn rs_field = [&](const Vec3& r) {
    const FieldTriplets f = plane_wave_fields(w, Event{0.0, r.x, r.y, r.z}, k);
    const RSVectors rs = rs_compose(f, lambda0);
    return w.helicity > 0 ? rs.F_plus : rs.F_minus;
  };
  const detail::SampledField sf = detail::sample_field(rs_field, grid);
  const detail::Norms norms = detail::interior_norms(sf.n, [&](int i, int j, int kk) {
    const CVec3 r = detail::fd_curl(sf, i, j, kk) -
                    cplx(s * w.omega0 / k.c) * sf.at(i, j, kk);
    return norm(r);
  });
  ResidualReport rep;
  rep.max_norm = norms.max_norm;
  rep.l2_norm = norms.l2_norm;
  return rep;
}

}  // namespace

ResidualReport vacuum_curl_eigen_residual(const PlaneWave& w,
                                          const GridSpec& grid,
                                          const Constants& k) {
  require_plane_wave(w);
  require_grid(grid);
  ResidualReport rep = curl_eigen_norms(w, grid, k);
  const ResidualReport fine = curl_eigen_norms(w, detail::refined(grid), k);
  if (rep.l2_norm > 0.0 && fine.l2_norm > 0.0)
    rep.order_estimate = std::log2(rep.l2_norm / fine.l2_norm);
  return rep;
}

std::array<std::array<cplx, 4>, 4> field_tensor(const FieldTriplets& f) {
  std::array<std::array<cplx, 4>, 4> F{};
  // E_a = F_{a0}; B^1 = F_{23}, B^2 = F_{31}, B^3 = F_{12}.
  F[1][0] = f.E.x;  F[0][1] = -f.E.x;
  F[2][0] = f.E.y;  F[0][2] = -f.E.y;
  F[3][0] = f.E.z;  F[0][3] = -f.E.z;
  F[2][3] = f.B.x;  F[3][2] = -f.B.x;
  F[3][1] = f.B.y;  F[1][3] = -f.B.y;
  F[1][2] = f.B.z;  F[2][1] = -f.B.z;
  return F;
}

std::array<std::array<cplx, 4>, 4> excitation_tensor(const FieldTriplets& f) {
  std::array<std::array<cplx, 4>, 4> Hx{};
  // D^a = Hx^{0a}; H_1 = Hx^{23}, H_2 = Hx^{31}, H_3 = Hx^{12}.
  Hx[0][1] = f.D.x;  Hx[1][0] = -f.D.x;
  Hx[0][2] = f.D.y;  Hx[2][0] = -f.D.y;
  Hx[0][3] = f.D.z;  Hx[3][0] = -f.D.z;
  Hx[2][3] = f.H.x;  Hx[3][2] = -f.H.x;
  Hx[3][1] = f.H.y;  Hx[1][3] = -f.H.y;
  Hx[1][2] = f.H.z;  Hx[2][1] = -f.H.z;
  return Hx;
}

}  // namespace spinlight
