// spinlight - observer-measured frequencies and energies: Doppler,
// helicity-rotation coupling, Sagnac phase, tetrad-projection pipeline

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinlight/constants.hpp"
#include "spinlight/fields.hpp"
#include "spinlight/linalg.hpp"

namespace spinlight {

// A light ray as seen by a rotating observer: inertial frequency and wave
// vector (|k0| = omega0/c in vacuum contexts), observer position and angular
// velocity, optional helicity.
struct RayState {
  double omega0 = 0.0;       // [rad/s]
  Vec3 k0{};                 // [rad/m]
  Vec3 r{};                  // observer position [m]
  Vec3 omega{};              // observer angular velocity [rad/s]
  std::optional<int> helicity;  // +1, -1, or unset
};

// Uniformly sampled complex time series of a tetrad-frame field component.
struct MeasuredSignal {
  std::vector<cplx> samples;
  double dt = 0.0;  // [s]
};

// Relativistic Doppler frequency omega_D = gamma (omega0 - Omega . l),
// l = r x k0, gamma from |v| = |Omega x r|. Throws DomainError for
// superluminal observers.
double doppler_frequency(const RayState& s, const Constants& k = {});

// Total measured energy E = gamma (E0 - Omega . L - Omega . S) with
// E0 = hbar omega0, L = hbar (r x k0), S = +/- hbar k0/|k0|. Requires the
// helicity to be set.
double energy_total(const RayState& s, const Constants& k = {});

struct HelicityShift {
  double omega = 0.0;  // measured frequency [rad/s]
  Vec3 k{};            // wave vector, unchanged by the rotation
};

// Frequency seen in the rotating frame, omega = omega0 - (+/- k_hat) . Omega;
// the wave vector is returned unchanged. Warns outside the WKB regime
// (|Omega| > 1e-3 omega0).
HelicityShift helicity_frequency(double omega0, const Vec3& k_hat,
                                 const Vec3& omega, int helicity);

// Sagnac phase (4 omega0 / c^2) Omega . A for oriented interferometer area A.
double sagnac_phase(double omega0, const Vec3& omega, const Vec3& area,
                    const Constants& k = {});

// Spin-rotation coupling Hamiltonian H = -S . Omega (no Lorentz factor;
// terms of second order in Omega are dropped throughout).
double spin_rotation_energy(const Vec3& spin, const Vec3& omega);

// Field tensor components measured by the static observer on the rotation
// axis at height z0, referred to axes rotating at Omega_z: hatted projections
// F_{ab} = F_{mu nu} e^mu_a e^nu_b. Requires the wave to travel along e_z.
struct ProjectedFieldComponents {
  cplx F_01, F_02, F_03;  // electric part (time-space)
  cplx F_23, F_31, F_12;  // magnetic part (space-space)
};

ProjectedFieldComponents tetrad_projected_wave(const PlaneWave& w, double omega_z,
                                               double t0, double z0,
                                               const Constants& k = {});

// Dominant angular frequency of the signal: Hann window, discrete Fourier
// transform, quadratic interpolation of the log-magnitude peak. Returns the
// magnitude of the peak frequency in rad/s. Throws NumericalError when the
// peak sits at the Nyquist edge (aliasing). The caller is responsible for
// sampling at least ~8 periods of the expected line.
double measured_frequency(const MeasuredSignal& sig);

// CSV import. Schema: header line "re,im,dt=<seconds>", then one "re,im"
// row per sample.
MeasuredSignal measured_signal_from_csv(const std::string& path);

}  // namespace spinlight
