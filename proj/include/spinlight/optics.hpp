// spinlight - Gordon optical metric and effective constitutive tensors

#pragma once

#include "spinlight/constants.hpp"
#include "spinlight/geometry.hpp"
#include "spinlight/linalg.hpp"

namespace spinlight {

// Homogeneous isotropic medium: relative permittivity and permeability.
struct MediumParams {
  double eps = 1.0;
  double mu = 1.0;

  double refractive_index() const { return std::sqrt(eps * mu); }
};

void require_medium(const MediumParams& m);

// Contravariant and covariant optical metric plus sqrt(-det) of the
// covariant form. The two matrices are exact mutual inverses analytically;
// numerically to the inverse tolerance.
struct OpticalMetric {
  Mat4 contravariant;
  Mat4 covariant;
  double sqrt_neg_det = 0.0;
};

// Effective anisotropic medium extracted from an optical metric:
//   epsilon^{ab} = lambda xi^{ab}   [F/m]
//   mu^{ab}      = xi^{ab} / lambda [H/m]
// xi carries 1/c so the vacuum case lands on eps0 / mu0 exactly. G is the
// dimensionless gyration vector mixing electric and magnetic responses.
struct ConstitutiveTensors {
  Mat3 xi;           // shared permittivity/permeability shape [s/m]
  Vec3 gyration;     // G
  double lambda = 0.0;  // inverse impedance [1/ohm]

  Mat3 eps_tensor() const { return lambda * xi; }
  Mat3 mu_tensor() const { return (1.0 / lambda) * xi; }
};

// lambda = sqrt(eps eps0 / (mu mu0)), the medium admittance.
double impedance_lambda(const MediumParams& m, const Constants& k = {});

// Gordon optical metric of a medium with 4-velocity u in spacetime g:
//   g_opt^{ab} = g^{ab} + (1 - eps mu) u^a u^b / c^2
//   g^opt_{ab} = g_{ab} + (1 - 1/(eps mu)) u_a u_b / c^2
// u must be normalized against g.
OpticalMetric optical_metric(const MetricComponents& g, const FourVelocity& u,
                             const MediumParams& m, const Constants& k = {},
                             const NumericPolicy& policy = {});

// Effective-medium tensors from an optical metric:
//   xi^{ab} = -sqrt(-g_opt) g_opt^{ab} / g^opt_00,  G_a = -g^opt_{0a} / g^opt_00.
// Throws DomainError when g^opt_00 degenerates (light-cylinder-type surface).
ConstitutiveTensors constitutive_from_optical(const OpticalMetric& om,
                                              const MediumParams& m,
                                              const Constants& k = {});

// Closed-form tensors for the comoving medium in the frame rotating at
// Omega_z about the z axis, exact in Omega. Valid inside the optical light
// cylinder eps mu Omega^2 (x^2 + y^2) < c^2.
ConstitutiveTensors rotating_constitutive_exact(double omega_z,
                                                const MediumParams& m,
                                                const Event& at,
                                                const Constants& k = {});

// First order in Omega: isotropic eps/mu tensors plus
// G = (eps mu / c^2) (Omega x r).
ConstitutiveTensors rotating_constitutive_linear(const Vec3& omega,
                                                 const MediumParams& m,
                                                 const Event& at,
                                                 const Constants& k = {});

}  // namespace spinlight
