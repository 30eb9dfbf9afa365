// spinlight - observer-measured frequencies and energies

#include "spinlight/kinematics.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "spinlight/errors.hpp"
#include "spinlight/geometry.hpp"

namespace spinlight {

namespace {

double observer_gamma(const RayState& s, const Constants& k) {
  const double v = norm(cross(s.omega, s.r));
  if (v >= k.c) throw DomainError("observer velocity |Omega x r| reaches c");
  return 1.0 / std::sqrt(1.0 - v * v / (k.c * k.c));
}

}  // namespace

double doppler_frequency(const RayState& s, const Constants& k) {
  if (!(s.omega0 > 0.0)) throw InvalidInputError("omega0 must be positive");
  const Vec3 l = cross(s.r, s.k0);
  return observer_gamma(s, k) * (s.omega0 - dot(s.omega, l));
}

double energy_total(const RayState& s, const Constants& k) {
  if (!(s.omega0 > 0.0)) throw InvalidInputError("omega0 must be positive");
  if (!s.helicity) throw InvalidInputError("energy_total requires a helicity");
  require_helicity(*s.helicity);
  const Vec3 L = k.hbar * cross(s.r, s.k0);
  const Vec3 S = (*s.helicity * k.hbar) * normalized(s.k0);
  const double E0 = k.hbar * s.omega0;
  return observer_gamma(s, k) * (E0 - dot(s.omega, L) - dot(s.omega, S));
}

HelicityShift helicity_frequency(double omega0, const Vec3& k_hat,
                                 const Vec3& omega, int helicity) {
  require_helicity(helicity);
  if (!(omega0 > 0.0)) throw InvalidInputError("omega0 must be positive");
  if (std::abs(norm(k_hat) - 1.0) > 1e-12)
    throw InvalidInputError("k_hat must be a unit vector");
  if (norm(omega) > 1e-3 * omega0)
    std::cerr << "spinlight: warning: |Omega|/omega0 exceeds 1e-3; "
                 "outside the WKB regime\n";
  HelicityShift out;
  out.omega = omega0 - helicity * dot(k_hat, omega);
  out.k = k_hat;  // the wave vector is unchanged by the rotation
  return out;
}

double sagnac_phase(double omega0, const Vec3& omega, const Vec3& area,
                    const Constants& k) {
  if (!(omega0 > 0.0)) throw InvalidInputError("omega0 must be positive");
  return 4.0 * omega0 / (k.c * k.c) * dot(omega, area);
}

double spin_rotation_energy(const Vec3& spin, const Vec3& omega) {
  return -dot(spin, omega);
}

ProjectedFieldComponents tetrad_projected_wave(const PlaneWave& w, double omega_z,
                                               double t0, double z0,
                                               const Constants& k) {
  require_plane_wave(w);
  if (norm(w.axis - Vec3{0.0, 0.0, 1.0}) > 1e-12)
    throw InvalidInputError("tetrad projection is defined for waves along e_z");
  const FieldTriplets f = plane_wave_fields(w, Event{t0, 0.0, 0.0, z0}, k);
  const auto F = field_tensor(f);
  const Tetrad tet = rotating_observer_tetrad(omega_z, t0);

  const auto project = [&](int a, int b) {
    cplx s = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) s += F[mu][nu] * tet.e[a][mu] * tet.e[b][nu];
    return s;
  };
  ProjectedFieldComponents out;
  out.F_01 = project(0, 1);
  out.F_02 = project(0, 2);
  out.F_03 = project(0, 3);
  out.F_23 = project(2, 3);
  out.F_31 = project(3, 1);
  out.F_12 = project(1, 2);
  return out;
}

namespace {

// Iterative radix-2 FFT (forward, e^{-2 pi i / N} kernel); falls back to a
// direct DFT when the length is not a power of two.
void forward_dft(std::vector<cplx>& x) {
  const std::size_t n = x.size();
  const bool pow2 = (n & (n - 1)) == 0;
  if (!pow2) {
    std::vector<cplx> out(n);
    const double w = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t m = 0; m < n; ++m) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        s += x[j] * std::polar(1.0, w * static_cast<double>(m * j % n));
      out[m] = s;
    }
    x = std::move(out);
    return;
  }
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wlen = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = x[i + j];
        const cplx v = x[i + j + len / 2] * w;
        x[i + j] = u + v;
        x[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

double measured_frequency(const MeasuredSignal& sig) {
  const std::size_t n = sig.samples.size();
  if (n < 16) throw InvalidInputError("signal must hold at least 16 samples");
  if (!(sig.dt > 0.0)) throw InvalidInputError("signal requires dt > 0");

  // Hann window tames leakage so the quadratic peak fit is reliable.
  std::vector<cplx> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double wj =
        0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                              static_cast<double>(n - 1)));
    x[j] = sig.samples[j] * wj;
  }
  forward_dft(x);

  std::vector<double> mag(n);
  std::size_t peak = 0;
  for (std::size_t m = 0; m < n; ++m) {
    mag[m] = std::abs(x[m]);
    if (mag[m] > mag[peak]) peak = m;
  }

  // e^{-i omega t} signals land in the upper half of the spectrum; a peak at
  // the fold-over bin means the line is not resolvable.
  const std::size_t nyquist = n / 2;
  if (peak == nyquist || peak + 1 == nyquist || peak == nyquist + 1)
    throw NumericalError("spectral peak at the Nyquist edge: sampling too coarse");

  // Quadratic interpolation of the log magnitude over the cyclic neighbors.
  const double m0 = mag[(peak + n - 1) % n];
  const double m1 = mag[peak];
  const double m2 = mag[(peak + 1) % n];
  double delta = 0.0;
  if (m0 > 0.0 && m1 > 0.0 && m2 > 0.0) {
    const double l0 = std::log(m0), l1 = std::log(m1), l2 = std::log(m2);
    const double denom = l0 - 2.0 * l1 + l2;
    if (denom != 0.0) delta = 0.5 * (l0 - l2) / denom;
    if (!(delta > -0.5 && delta < 0.5)) delta = 0.0;
  }

  double bin = static_cast<double>(peak) + delta;
  if (bin > static_cast<double>(n) / 2.0) bin -= static_cast<double>(n);
  const double freq = bin / (static_cast<double>(n) * sig.dt);
  return std::abs(2.0 * std::numbers::pi * freq);
}

MeasuredSignal measured_signal_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open signal file: " + path);
  std::string header;
  if (!std::getline(in, header))
    throw InvalidInputError("signal file is empty: " + path);
  const std::string prefix = "re,im,dt=";
  if (header.rfind(prefix, 0) != 0)
    throw InvalidInputError("signal header must be 're,im,dt=<seconds>'");
  MeasuredSignal sig;
  try {
    sig.dt = std::stod(header.substr(prefix.size()));
  } catch (const std::exception&) {
    throw InvalidInputError("cannot parse dt in signal header");
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string re_s, im_s;
    if (!std::getline(row, re_s, ',') || !std::getline(row, im_s))
      throw InvalidInputError("malformed signal row: " + line);
    try {
      sig.samples.emplace_back(std::stod(re_s), std::stod(im_s));
    } catch (const std::exception&) {
      throw InvalidInputError("malformed signal row: " + line);
    }
  }
  if (sig.samples.size() < 16)
    throw InvalidInputError("signal must hold at least 16 samples");
  if (!(sig.dt > 0.0)) throw InvalidInputError("signal requires dt > 0");
  return sig;
}

}  // namespace spinlight
