// spinlight - Gordon optical metric and effective constitutive tensors

#include "spinlight/optics.hpp"

#include <cmath>

#include "spinlight/errors.hpp"

namespace spinlight {

void require_medium(const MediumParams& m) {
  if (!(m.eps > 0.0) || !(m.mu > 0.0) || !std::isfinite(m.eps) || !std::isfinite(m.mu))
    throw InvalidInputError("medium requires eps > 0 and mu > 0");
}

double impedance_lambda(const MediumParams& m, const Constants& k) {
  require_medium(m);
  return std::sqrt(m.eps * k.eps0 / (m.mu * k.mu0));
}

OpticalMetric optical_metric(const MetricComponents& g, const FourVelocity& u,
                             const MediumParams& m, const Constants& k,
                             const NumericPolicy& policy) {
  require_medium(m);
  if (four_velocity_normalization_error(u, g, k) > policy.orthonormality_tol)
    throw InvalidInputError("4-velocity is not normalized against the metric");

  const double c2 = k.c * k.c;
  const double em = m.eps * m.mu;
  const Vec4 uu = u.components();
  Vec4 ul;  // u_alpha = g_{alpha beta} u^beta
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += g.g(i, j) * uu[j];
    ul[i] = s;
  }

  const Mat4 ginv = inverse_symmetric(g.g);
  OpticalMetric out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      out.contravariant(i, j) = ginv(i, j) + (1.0 - em) * uu[i] * uu[j] / c2;
      out.covariant(i, j) = g.g(i, j) + (1.0 - 1.0 / em) * ul[i] * ul[j] / c2;
    }

  const double d = det(out.covariant);
  if (!(d < 0.0)) throw InvalidInputError("optical metric is not Lorentzian");
  out.sqrt_neg_det = std::sqrt(-d);
  return out;
}

ConstitutiveTensors constitutive_from_optical(const OpticalMetric& om,
                                              const MediumParams& m,
                                              const Constants& k) {
  const double g00 = om.covariant(0, 0);
  const double scale = max_abs(om.covariant);
  if (std::abs(g00) <= 1e-14 * scale)
    throw DomainError("optical metric degenerate: g^opt_00 = 0 (singular medium)");

  ConstitutiveTensors ct;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      ct.xi(a, b) = -om.sqrt_neg_det * om.contravariant(a + 1, b + 1) / g00;
  ct.gyration = {-om.covariant(0, 1) / g00, -om.covariant(0, 2) / g00,
                 -om.covariant(0, 3) / g00};
  ct.lambda = impedance_lambda(m, k);
  return ct;
}

ConstitutiveTensors rotating_constitutive_exact(double omega_z,
                                                const MediumParams& m,
                                                const Event& at,
                                                const Constants& k) {
  require_medium(m);
  if (!is_finite(at)) throw InvalidInputError("event has non-finite components");
  const double c = k.c;
  const double em = m.eps * m.mu;
  const double x = at.x, y = at.y;
  const double inv_chi2 = 1.0 - em * omega_z * omega_z * (x * x + y * y) / (c * c);
  if (!(inv_chi2 > 0.0))
    throw DomainError("point lies outside the optical light cylinder");
  const double chi2 = 1.0 / inv_chi2;
  const double w2 = em * omega_z * omega_z / (c * c);

  ConstitutiveTensors ct;
  const double pref = chi2 * std::sqrt(em) / c;
  ct.xi(0, 0) = pref * (1.0 - w2 * y * y);
  ct.xi(0, 1) = ct.xi(1, 0) = pref * w2 * x * y;
  ct.xi(1, 1) = pref * (1.0 - w2 * x * x);
  ct.xi(2, 2) = pref;
  ct.xi(0, 2) = ct.xi(2, 0) = ct.xi(1, 2) = ct.xi(2, 1) = 0.0;

  // G = -chi^2 (eps mu / c) K with K = -(Omega x r)/c.
  const Vec3 omega{0.0, 0.0, omega_z};
  ct.gyration = (chi2 * em / (c * c)) * cross(omega, at.position());
  ct.lambda = impedance_lambda(m, k);
  return ct;
}

ConstitutiveTensors rotating_constitutive_linear(const Vec3& omega,
                                                 const MediumParams& m,
                                                 const Event& at,
                                                 const Constants& k) {
  require_medium(m);
  if (!is_finite(at)) throw InvalidInputError("event has non-finite components");
  const double em = m.eps * m.mu;
  ConstitutiveTensors ct;
  const double pref = std::sqrt(em) / k.c;
  ct.xi = pref * Mat3::identity();
  ct.gyration = (em / (k.c * k.c)) * cross(omega, at.position());
  ct.lambda = impedance_lambda(m, k);
  return ct;
}

}  // namespace spinlight
