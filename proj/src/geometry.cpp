// spinlight - stationary spacetimes in lapse-shift form, rotating frames,
// observer tetrads

#include "spinlight/geometry.hpp"

#include <cmath>

#include "spinlight/errors.hpp"

namespace spinlight {

namespace {

void require_event(const Event& at) {
  if (!is_finite(at)) throw InvalidInputError("event has non-finite components");
}

struct AdmSample {
  double lapse;
  Vec3 shift;
  Mat3 gamma;
};

AdmSample sample_adm(const ADMForm& adm, const Vec3& r) {
  if (!adm.lapse || !adm.shift || !adm.spatial_metric)
    throw InvalidInputError("ADM form has unset fields");
  AdmSample s{adm.lapse(r), adm.shift(r), adm.spatial_metric(r)};
  if (!(s.lapse > 0.0) || !std::isfinite(s.lapse))
    throw InvalidInputError("ADM lapse must be positive");
  if (!is_symmetric(s.gamma, 1e-13) || !is_positive_definite(s.gamma))
    throw InvalidInputError("ADM spatial metric must be symmetric positive definite");
  return s;
}

}  // namespace

MetricComponents adm_to_metric(const ADMForm& adm, const Event& at,
                               const Constants& k, const NumericPolicy& policy) {
  require_event(at);
  const AdmSample s = sample_adm(adm, at.position());
  const Vec3 gk = s.gamma * s.shift;
  const double kk = dot(s.shift, gk);
  // Admissibility: the shift must stay inside the margin fraction of the
  // local light cylinder, g_ab K^a K^b < margin^2 V^2.
  const double m2 = policy.admissibility_margin * policy.admissibility_margin;
  if (kk >= m2 * s.lapse * s.lapse)
    throw DomainError("point lies outside the admissible region of the frame");

  const double c = k.c;
  MetricComponents out;
  out.g(0, 0) = -s.lapse * s.lapse * c * c + c * c * kk;
  const double g0[3] = {-c * gk.x, -c * gk.y, -c * gk.z};
  for (int a = 0; a < 3; ++a) {
    out.g(0, a + 1) = g0[a];
    out.g(a + 1, 0) = g0[a];
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.g(a + 1, b + 1) = s.gamma(a, b);
  return out;
}

ADMForm minkowski_adm() {
  ADMForm adm;
  adm.lapse = [](const Vec3&) { return 1.0; };
  adm.shift = [](const Vec3&) { return Vec3{}; };
  adm.spatial_metric = [](const Vec3&) { return Mat3::identity(); };
  return adm;
}

ADMForm rotating_frame_adm(const Vec3& omega, const Constants& k) {
  const double c = k.c;
  ADMForm adm;
  adm.lapse = [](const Vec3&) { return 1.0; };
  adm.shift = [omega, c](const Vec3& r) { return (-1.0 / c) * cross(omega, r); };
  adm.spatial_metric = [](const Vec3&) { return Mat3::identity(); };
  return adm;
}

Event inertial_to_rotating(const Event& e, double omega_z) {
  require_event(e);
  const double cth = std::cos(omega_z * e.t);
  const double sth = std::sin(omega_z * e.t);
  // The spatial rotation has unit Jacobian determinant, so tensor densities
  // and tensors coincide numerically under this transformation.
  return Event{e.t, e.x * cth + e.y * sth, -e.x * sth + e.y * cth, e.z};
}

Event rotating_to_inertial(const Event& e, double omega_z) {
  require_event(e);
  const double cth = std::cos(omega_z * e.t);
  const double sth = std::sin(omega_z * e.t);
  return Event{e.t, e.x * cth - e.y * sth, e.x * sth + e.y * cth, e.z};
}

Tetrad rotating_observer_tetrad(double omega_z, double t) {
  const double cth = std::cos(omega_z * t);
  const double sth = std::sin(omega_z * t);
  Tetrad tet;
  tet.e[0] = Vec4{{1.0, 0.0, 0.0, 0.0}};
  tet.e[1] = Vec4{{0.0, cth, sth, 0.0}};
  tet.e[2] = Vec4{{0.0, -sth, cth, 0.0}};
  tet.e[3] = Vec4{{0.0, 0.0, 0.0, 1.0}};
  return tet;
}

Tetrad fermi_tetrad(const ADMForm& adm, const Event& at, const Constants& k,
                    const NumericPolicy& policy) {
  require_event(at);
  const AdmSample s = sample_adm(adm, at.position());
  const Mat3 dev = s.gamma - Mat3::identity();
  if (std::abs(s.lapse - 1.0) > 1e-12 || max_abs(dev) > 1e-12)
    throw DomainError("fermi_tetrad supports only V = 1, flat spatial metric");
  const double m2 = policy.admissibility_margin * policy.admissibility_margin;
  if (norm2(s.shift) >= m2)
    throw DomainError("point lies outside the admissible region of the frame");
  const double c = k.c;
  Tetrad tet;
  tet.e[0] = Vec4{{1.0, c * s.shift.x, c * s.shift.y, c * s.shift.z}};
  tet.e[1] = Vec4{{0.0, 1.0, 0.0, 0.0}};
  tet.e[2] = Vec4{{0.0, 0.0, 1.0, 0.0}};
  tet.e[3] = Vec4{{0.0, 0.0, 0.0, 1.0}};
  return tet;
}

double lorentz_factor(const ADMForm& adm, const Vec3& v, const Event& at,
                      const Constants& k) {
  require_event(at);
  if (!is_finite(v)) throw InvalidInputError("velocity has non-finite components");
  const AdmSample s = sample_adm(adm, at.position());
  const Vec3 rel = v - k.c * s.shift;
  const double inv_g2 = s.lapse * s.lapse - dot(rel, s.gamma * rel) / (k.c * k.c);
  if (!(inv_g2 > 0.0))
    throw DomainError("velocity is null or superluminal for this frame");
  return 1.0 / std::sqrt(inv_g2);
}

FourVelocity four_velocity(const ADMForm& adm, const Vec3& v, const Event& at,
                           const Constants& k) {
  return FourVelocity{lorentz_factor(adm, v, at, k), v};
}

FourVelocity comoving_four_velocity(const ADMForm& adm, const Event& at,
                                    const Constants& k) {
  const Vec3 v = k.c * adm.shift(at.position());
  return four_velocity(adm, v, at, k);
}

double tetrad_orthonormality_error(const Tetrad& tet, const MetricComponents& g,
                                   const Constants& k) {
  const double c2 = k.c * k.c;
  double err = std::abs(bilinear(g.g, tet.e[0], tet.e[0]) / c2 + 1.0);
  for (int a = 1; a < 4; ++a) {
    err = std::max(err, std::abs(bilinear(g.g, tet.e[0], tet.e[a])) / k.c);
    for (int b = 1; b < 4; ++b) {
      const double target = (a == b) ? 1.0 : 0.0;
      err = std::max(err, std::abs(bilinear(g.g, tet.e[a], tet.e[b]) - target));
    }
  }
  return err;
}

int metric_negative_eigenvalue_count(const MetricComponents& g,
                                     const Constants& k) {
  Mat4 scaled = g.g;
  for (int i = 0; i < 4; ++i) {
    scaled(0, i) /= k.c;
    scaled(i, 0) /= (i == 0) ? 1.0 : k.c;
  }
  const auto eig = symmetric_eigenvalues(scaled);
  int negatives = 0;
  for (double e : eig)
    if (e < 0.0) ++negatives;
  return negatives;
}

double four_velocity_normalization_error(const FourVelocity& u,
                                         const MetricComponents& g,
                                         const Constants& k) {
  const double c2 = k.c * k.c;
  const double n = bilinear(g.g, u.components(), u.components());
  return std::abs(n / c2 + 1.0) / std::max(1.0, u.gamma * u.gamma);
}

}  // namespace spinlight
