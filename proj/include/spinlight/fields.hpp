// spinlight - electromagnetic fields, helicity plane waves, generalized
// Riemann-Silberstein combinations

#pragma once

#include <array>
#include <functional>

#include "spinlight/constants.hpp"
#include "spinlight/geometry.hpp"
#include "spinlight/grid.hpp"
#include "spinlight/linalg.hpp"
#include "spinlight/optics.hpp"

namespace spinlight {

// Complex field strengths (E, B) and excitations (D, H). Physical fields are
// the real parts. E and H behave as 3-covectors, B and D as 3-vector
// densities under spatial coordinate changes; in the Cartesian frames used
// here the distinction is invisible.
struct FieldTriplets {
  CVec3 E;  // [V/m]
  CVec3 B;  // [T]
  CVec3 D;  // [C/m^2]
  CVec3 H;  // [A/m]
};

// The helicity pair F+/- = lambda E +/- i H and Z+/- = D +/- i lambda B in
// which source-free Maxwell equations decouple.
struct RSVectors {
  CVec3 F_plus, F_minus;  // [A/m]
  CVec3 Z_plus, Z_minus;  // [C/m^2]
};

// Monochromatic definite-helicity plane wave.
struct PlaneWave {
  double omega0 = 0.0;     // [rad/s], > 0
  cplx amplitude = 1.0;    // a [V/m]
  int helicity = +1;       // +1 or -1
  Vec3 axis{0.0, 0.0, 1.0};  // unit propagation direction
};

void require_helicity(int helicity);
void require_plane_wave(const PlaneWave& w);

// Right-handed orthonormal triad (d1, d2, axis); d1 is chosen by the
// smallest-component rule for numerical stability.
std::array<Vec3, 3> propagation_triad(const Vec3& axis);

// Circularly polarized fields of the wave at an event. Along e_z:
//   E = a (e_x +/- i e_y) exp(-i w0 (t - z/c)),  B = (-/+ i a / c) (e_x +/- i e_y) phase,
// with D = eps0 E and H = B / mu0 (vacuum excitations). Other axes are the
// rigid rotation of this closed form onto the propagation triad.
FieldTriplets plane_wave_fields(const PlaneWave& w, const Event& at,
                                const Constants& k = {});

// F+/- = lambda E +/- i H, Z+/- = D +/- i lambda B, and the exact inverse.
RSVectors rs_compose(const FieldTriplets& f, double lambda);
FieldTriplets rs_decompose(const RSVectors& rs, double lambda);

// Constitutive map in the helicity basis: Z^a = xi^{ab} F_b +/- i (G x F)^a.
CVec3 rs_constitutive(const CVec3& F, int sign, const ConstitutiveTensors& ct);

// Finite-difference check of curl F+/- = +/- (w0/c) F+/- for a vacuum plane
// wave, sampled on `grid` at t = 0. Norms cover interior nodes; the order
// estimate comes from an internal once-refined grid.
ResidualReport vacuum_curl_eigen_residual(const PlaneWave& w, const GridSpec& grid,
                                          const Constants& k = {});

// On-demand antisymmetric 4-tensor views with x^0 = t:
//   F_{a0} = E_a, F_{23} = B^1 (cyclic);  Hx^{0a} = D^a, Hx^{23} = H_1 (cyclic).
std::array<std::array<cplx, 4>, 4> field_tensor(const FieldTriplets& f);
std::array<std::array<cplx, 4>, 4> excitation_tensor(const FieldTriplets& f);

}  // namespace spinlight
