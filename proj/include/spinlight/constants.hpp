// spinlight - physical constants and numeric policy

#pragma once

namespace spinlight {

// Physical constants in SI units, CODATA 2018. A single mutable copy can be
// handed to any operation for nondimensionalized runs (e.g. c = 1).
//
// eps0 is derived from (mu0, c) instead of being stored as a rounded literal
// so that eps0*mu0*c^2 == 1 holds to machine precision; the derived value
// agrees with the listed CODATA figure within its stated uncertainty. Several
// identities (vacuum admittance, helicity purity of the Riemann-Silberstein
// split) cancel exactly only under that relation.
struct Constants {
  double c = 299792458.0;              // speed of light [m/s]
  double mu0 = 1.25663706212e-6;       // vacuum permeability [H/m]
  double eps0 = 1.0 / (mu0 * c * c);   // vacuum permittivity [F/m]
  double G_N = 6.67430e-11;            // Newton constant [m^3/(kg s^2)]
  double hbar = 1.054571817e-34;       // reduced Planck constant [J s]
};

// Tolerances used by invariant checks. One object so tests can tighten or
// relax everything in one place.
struct NumericPolicy {
  double orthonormality_tol = 1e-12;   // tetrad / 4-velocity normalization
  double roundtrip_tol = 1e-14;        // coordinate round trips
  double inverse_tol = 1e-12;          // matrix inverse residuals
  double admissibility_margin = 0.999; // fraction of the light cylinder allowed
};

}  // namespace spinlight
