// spinlight - gravitoelectromagnetism of a slowly rotating mass: exterior
// potentials and fields, GEM metric, spin-gravity coupling, gravitational
// Faraday rotation

#pragma once

#include <map>
#include <string>

#include "spinlight/constants.hpp"
#include "spinlight/geometry.hpp"
#include "spinlight/linalg.hpp"

namespace spinlight {

// Uniformly rotating astronomical source. body_radius bounds the exterior
// region where the multipole potentials are valid.
struct GEMSource {
  double mass = 0.0;         // M [kg]
  Vec3 angular_momentum{};   // J [kg m^2/s]
  double body_radius = 0.0;  // [m]
};

void require_source(const GEMSource& src);

// Phi_g = G M / |x| (positive in the attractive convention),
// A_g = (G/c) (J x x) / |x|^3.
struct GEMPotentials {
  double Phi = 0.0;  // [m^2/s^2]
  Vec3 A{};          // [m^2/s^2]
};

// E_g = -grad Phi_g (points outward, toward decreasing Phi_g; the Newtonian
// acceleration of a static test mass is -E_g), B_g = curl A_g.
struct GEMFields {
  Vec3 E{};  // [m/s^2]
  Vec3 B{};  // [m/s^2]
};

GEMPotentials gem_potentials(const GEMSource& src, const Vec3& x,
                             const Constants& k = {});

// Closed-form exterior fields:
//   E_g = G M x / |x|^3,
//   B_g = (G / (c |x|^5)) [3 (J . x) x - J |x|^2].
GEMFields gem_fields(const GEMSource& src, const Vec3& x, const Constants& k = {});

// Weak-field stationary metric
//   ds^2 = -(1 - 2 Phi/c^2) c^2 dt^2 - (4/c)(A . dx) dt
//          + (1 + 2 Phi/c^2) delta_ab dx^a dx^b.
// Throws DomainError when Phi/c^2 > 0.01 (weak-field violation).
MetricComponents gem_metric(const GEMSource& src, const Event& at,
                            const Constants& k = {});

// Larmor frequency locally equivalent to the gravitomagnetic field,
// Omega_L = -B_g / c.
Vec3 larmor_frequency(const Vec3& B_g, const Constants& k = {});

// Intrinsic spin-gravity coupling H = (1/c) S . B_g.
double spin_gravity_energy(const Vec3& spin, const Vec3& B_g,
                           const Constants& k = {});

// First-order dispersion in the gravitomagnetic field:
//   c k = omega -/+ (1/c) n_hat . B_g(x)   (helicity +/- 1).
// On the axis of J = J e_z this is c k(+/-) = omega -/+ 2 G J / (c^2 z^3).
double gravitomagnetic_dispersion(double omega, const GEMSource& src,
                                  const Vec3& x, const Vec3& n_hat, int helicity,
                                  const Constants& k = {});

// Half the helicity wavenumber split, (k_minus - k_plus)/2 = n_hat.B_g / c^2.
// This is the exact rearrangement of the dispersion difference; forming it
// from two k values would cancel catastrophically at optical omega, where
// the split sits ~29 decades below omega.
double helicity_wavenumber_split(const GEMSource& src, const Vec3& x,
                                 const Vec3& n_hat, const Constants& k = {});

// chi_g = (G/c) (J . x) / |x|^3, with B_g = -grad chi_g in the exterior.
double gravitomagnetic_scalar_potential(const GEMSource& src, const Vec3& x,
                                        const Constants& k = {});

// Rotation of the plane of linear polarization accumulated along the J axis
// from z_i to z_f (closed form): Delta = (G J / c^3)(1/z_i^2 - 1/z_f^2).
// z_f may be +infinity. Requires J along e_z and exterior endpoints.
double faraday_rotation_axial(const GEMSource& src, double z_i, double z_f,
                              const Constants& k = {});

// The same angle by adaptive quadrature of (k_minus - k_plus)/2 along the
// axis, substituting u = 1/z^2 so the integrand is regular out to infinity.
// The omega argument enters the dispersion branches and cancels in their
// difference; it is validated but does not influence the result.
double faraday_rotation_numeric(const GEMSource& src, double z_i, double z_f,
                                double omega, const Constants& k = {});

// Named source catalog. The built-in catalog ships Earth
// (M = 5.972e24 kg, J = 5.86e33 kg m^2/s along z, R = 6.371e6 m).
std::map<std::string, GEMSource> builtin_source_catalog();

// Loads a JSON catalog {"name": {"mass_kg": ..., "angular_momentum_kg_m2_per_s":
// [x, y, z], "body_radius_m": ...}, ...} and overlays it on the built-ins.
std::map<std::string, GEMSource> load_source_catalog(const std::string& path);

}  // namespace spinlight
