// Acceptance suite: one check per release criterion, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "spinlight/gem.hpp"
#include "spinlight/kinematics.hpp"
#include "spinlight/solver.hpp"
#include "test_helpers.hpp"

using namespace spinlight;
using testutil::Rng;

namespace {

const Constants kSI{};
constexpr double kPi = std::numbers::pi;
constexpr double kJoulePerEv = 1.602176634e-19;

int failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  std::printf("[%s] %d. %s  (%s; %.2fs)\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str(), seconds);
  if (!pass) ++failures;
}

void run_criterion(int index, const std::string& name,
                   const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(index, name, pass, detail, seconds);
}

char buf[256];

// 1. hbar Omega_earth within 5% of 5e-20 eV.
std::pair<bool, std::string> criterion_spin_rotation_scale() {
  const double omega_earth = 2.0 * kPi * 11.6e-6;
  const double ev =
      std::abs(spin_rotation_energy({0, 0, kSI.hbar}, {0, 0, omega_earth})) /
      kJoulePerEv;
  std::snprintf(buf, sizeof(buf), "hbar*Omega = %.3e eV vs 5e-20 eV", ev);
  return {std::abs(ev - 5e-20) <= 0.05 * 5e-20, buf};
}

// 2. hbar |B_g|/c for Earth at z = R within a factor 3 of 1e-29 eV.
std::pair<bool, std::string> criterion_spin_gravity_scale() {
  const GEMSource earth = builtin_source_catalog().at("earth");
  const Vec3 B = gem_fields(earth, {0, 0, earth.body_radius}).B;
  const double ev = std::abs(spin_gravity_energy({0, 0, kSI.hbar}, B)) /
                    kJoulePerEv;
  std::snprintf(buf, sizeof(buf), "hbar*|B_g|/c = %.3e eV vs 1e-29 eV", ev);
  return {ev >= 1e-29 / 3.0 && ev <= 3e-29, buf};
}

// 3. dispersion_recover vs the closed form over the full parameter grid.
std::pair<bool, std::string> criterion_dispersion_oracle() {
  double worst = 0.0;
  int count = 0;
  for (double omega : {1e14, 1e15})
    for (double omega_z : {0.0, 1.0, 1e3})
      for (double n2 : {1.0, 2.25})
        for (int h : {+1, -1}) {
          const MediumParams m{n2, 1.0};
          const GridSpec grid = dispersion_recovery_grid(omega, m);
          const double k_rec = dispersion_recover(omega, omega_z, m, h, grid);
          const double k_closed = dispersion_axial(omega, omega_z, m, h);
          worst = std::max(worst, std::abs(k_rec - k_closed) / k_closed);
          ++count;
        }
  std::snprintf(buf, sizeof(buf), "%d combinations, worst rel diff %.2e",
                count, worst);
  return {count == 24 && worst < 1e-6, buf};
}

// 4. Residual convergence order >= 1.9 and a wrong-k plateau.
std::pair<bool, std::string> criterion_residual_convergence() {
  const double omega = 1e6;
  const MediumParams m{2.25, 1.0};
  const double n = m.refractive_index();
  const double lambda = 2.0 * kPi * kSI.c / (n * omega);

  const auto tensors = [&](double omega_z) {
    return TensorFunction([omega_z, m](const Vec3& r) {
      return rotating_constitutive_linear({0, 0, omega_z}, m,
                                          Event{0, r.x, r.y, r.z});
    });
  };
  const auto field_of = [&](const HelicityMode& mode) {
    return FieldFunction([mode](const Vec3& r) {
      return ansatz_field(mode, Event{0, r.x, r.y, r.z});
    });
  };
  const auto cube = [](double half, int pts) {
    GridSpec g;
    g.half_extent = {half, half, half};
    g.points = {pts, pts, pts};
    return g;
  };

  // Correct k at tiny Omega: two successive halvings, order >= 1.9 each.
  const double omega_slow = 1e-3;
  double min_order = 10.0;
  for (int h : {+1, -1}) {
    const HelicityMode mode{h, omega, dispersion_axial(omega, omega_slow, m, h),
                            1.0, m, omega_slow};
    for (int pts : {9, 17}) {
      const ResidualReport rep =
          curl_residual(field_of(mode), h, omega, tensors(omega_slow),
                        cube(lambda / 4, pts), omega_slow);
      min_order = std::min(min_order, rep.order_estimate);
    }
  }

  // Wrong k at Omega/omega = 1e-3: plateau does not shrink under halving.
  const double omega_fast = 1e3;
  const HelicityMode wrong{+1, omega, n * omega / kSI.c, 1.0, m, omega_fast};
  const ResidualReport p1 =
      curl_residual(field_of(wrong), +1, omega, tensors(omega_fast),
                    cube(lambda / 80, 9), omega_fast);
  const ResidualReport p2 =
      curl_residual(field_of(wrong), +1, omega, tensors(omega_fast),
                    cube(lambda / 80, 17), omega_fast);
  const double plateau_expected = std::sqrt(2.0) * n * omega_fast / kSI.c;
  const bool plateau_ok = p2.l2_norm > 0.9 * p1.l2_norm &&
                          std::abs(p1.order_estimate) < 0.2 &&
                          std::abs(p1.l2_norm / plateau_expected - 1.0) < 0.3;

  std::snprintf(buf, sizeof(buf),
                "min order %.3f; plateau %.2e vs %.2e, ratio(h/2) %.3f",
                min_order, p1.l2_norm, plateau_expected,
                p2.l2_norm / p1.l2_norm);
  return {min_order >= 1.9 && plateau_ok, buf};
}

// 5. FFT pipeline returns omega0 -/+ Omega within half an interpolated bin.
std::pair<bool, std::string> criterion_rotational_doppler() {
  const double omega0 = 2.0 * kPi * 100.0;
  const double omega_z = 2.0 * kPi * 1.0;
  const std::size_t n = 1024;
  const double dt = 1e-3;
  const double half_bin = kPi / (static_cast<double>(n) * dt);

  double worst = 0.0;
  for (int h : {+1, -1}) {
    const PlaneWave w{omega0, 1.0, h, {0, 0, 1}};
    MeasuredSignal sig;
    sig.dt = dt;
    for (std::size_t j = 0; j < n; ++j)
      sig.samples.push_back(
          tetrad_projected_wave(w, omega_z, static_cast<double>(j) * dt, 0.0)
              .F_01);
    const double measured = measured_frequency(sig);
    const double expected = omega0 - h * omega_z;
    worst = std::max(worst, std::abs(measured - expected));
  }
  std::snprintf(buf, sizeof(buf), "worst |error| %.3e rad/s vs half bin %.3e",
                worst, half_bin);
  return {worst < half_bin, buf};
}

// 6. Faraday quadrature vs closed form over two decades, omega-independent.
std::pair<bool, std::string> criterion_faraday() {
  const GEMSource earth = builtin_source_catalog().at("earth");
  const double R = earth.body_radius;
  const double inf = std::numeric_limits<double>::infinity();
  const double spans[][2] = {{R, 2 * R},      {R, 10 * R},   {R, 100 * R},
                             {3 * R, 60 * R}, {10 * R, 1000 * R}, {R, inf}};
  double worst = 0.0;
  for (const auto& span : spans) {
    const double closed = faraday_rotation_axial(earth, span[0], span[1]);
    const double numeric =
        faraday_rotation_numeric(earth, span[0], span[1], 1e15);
    worst = std::max(worst, std::abs(numeric - closed) / std::abs(closed));
  }
  const double a = faraday_rotation_numeric(earth, R, 50 * R, 1e15);
  const double b = faraday_rotation_numeric(earth, R, 50 * R, 1e12);
  const double omega_dep = std::abs(a - b) / std::abs(a);
  std::snprintf(buf, sizeof(buf),
                "worst rel diff %.2e; omega dependence %.2e", worst, omega_dep);
  return {worst < 1e-9 && omega_dep < 1e-12, buf};
}

// 7. Constitutive pipeline equivalence and the determinant identity.
std::pair<bool, std::string> criterion_constitutive_pipeline() {
  Rng rng(2024);
  double worst_ct = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double omega = rng.log_uniform(1e-1, 1e4);
    const MediumParams m{rng.uniform(0.5, 4.0), rng.uniform(0.5, 4.0)};
    const double rho_opt = kSI.c / (m.refractive_index() * omega);
    const double rho_geom = 0.999 * kSI.c / omega;
    const double rho_max = 0.6 * std::min(rho_opt, rho_geom);
    const Event at{0.0, rng.uniform(-rho_max, rho_max),
                   rng.uniform(-rho_max, rho_max), rng.uniform(-1e4, 1e4)};

    const ConstitutiveTensors closed = rotating_constitutive_exact(omega, m, at);
    const ADMForm adm = rotating_frame_adm({0, 0, omega});
    const ConstitutiveTensors generic = constitutive_from_optical(
        optical_metric(adm_to_metric(adm, at), comoving_four_velocity(adm, at),
                       m),
        m);
    const double xi_scale = max_abs(closed.xi);
    worst_ct = std::max(worst_ct, max_abs(closed.xi - generic.xi) / xi_scale);
    worst_ct = std::max(
        worst_ct, norm(closed.gyration - generic.gyration) /
                      std::max(norm(closed.gyration), xi_scale));
    worst_ct = std::max(worst_ct,
                        std::abs(closed.lambda - generic.lambda) / closed.lambda);
  }

  double worst_det = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double omega = rng.log_uniform(1e-2, 1e3);
    const MediumParams m{rng.uniform(0.5, 4.0), rng.uniform(0.5, 4.0)};
    const ADMForm adm = rotating_frame_adm({0, 0, omega});
    const double rho_max = 0.5 * kSI.c / omega;
    const Event at{0.0, rng.uniform(-rho_max, rho_max),
                   rng.uniform(-rho_max, rho_max), rng.uniform(-1e4, 1e4)};
    const MetricComponents g = adm_to_metric(adm, at);
    const OpticalMetric om =
        optical_metric(g, comoving_four_velocity(adm, at), m);
    const double expected = std::sqrt(-det(g.g)) / m.refractive_index();
    worst_det =
        std::max(worst_det, std::abs(om.sqrt_neg_det - expected) / expected);
  }
  std::snprintf(buf, sizeof(buf),
                "pipeline worst %.2e; det identity worst %.2e", worst_ct,
                worst_det);
  return {worst_ct < 1e-12 && worst_det < 1e-12, buf};
}

// 8. Property suites: Sagnac zeros/linearity, helicity antisymmetry,
// exterior field identities, RS round trips.
std::pair<bool, std::string> criterion_property_suites() {
  Rng rng(4096);
  bool ok = true;
  std::string first_fail;
  const auto expect = [&](bool cond, const char* what) {
    if (!cond && ok) {
      ok = false;
      first_fail = what;
    }
  };

  // Sagnac: vanishes for Omega . A = 0, linear in omega0, Omega, A.
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 omega = rng.vec3(-1e-4, 1e-4);
    Vec3 in_plane = cross(omega, rng.unit_vec3());
    if (norm(in_plane) == 0.0) in_plane = {1, 0, 0};
    const double w0 = rng.log_uniform(1e14, 1e16);
    expect(std::abs(sagnac_phase(w0, omega, in_plane)) <
               1e-12 * w0 / (kSI.c * kSI.c) * norm(omega) * norm(in_plane) +
                   1e-300,
           "sagnac zero for in-plane axis");
    const Vec3 area = rng.vec3(-5, 5);
    const double p = sagnac_phase(w0, omega, area);
    expect(testutil::rel_diff(sagnac_phase(2.0 * w0, omega, area), 2.0 * p) <
               1e-13 ||
               p == 0.0,
           "sagnac linear in omega0");
    expect(testutil::rel_diff(sagnac_phase(w0, 3.0 * omega, area), 3.0 * p) <
               1e-13 ||
               p == 0.0,
           "sagnac linear in Omega");
    expect(testutil::rel_diff(sagnac_phase(w0, omega, 0.5 * area), 0.5 * p) <
               1e-13 ||
               p == 0.0,
           "sagnac linear in A");
  }

  // Helicity-flip antisymmetry of every spin coupling.
  const GEMSource earth = builtin_source_catalog().at("earth");
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 spin = rng.vec3(-1, 1) * kSI.hbar;
    const Vec3 omega = rng.vec3(-1e-3, 1e-3);
    expect(spin_rotation_energy(spin, omega) ==
               -spin_rotation_energy(-1.0 * spin, omega),
           "spin-rotation antisymmetry");
    const Vec3 B = rng.vec3(-1e-5, 1e-5);
    expect(spin_gravity_energy(spin, B) ==
               -spin_gravity_energy(-1.0 * spin, B),
           "spin-gravity antisymmetry");

    const double w0 = rng.log_uniform(1e13, 1e16);
    const Vec3 k_hat = rng.unit_vec3();
    const Vec3 w_frame = rng.vec3(-10, 10);
    const double up = helicity_frequency(w0, k_hat, w_frame, +1).omega;
    const double dn = helicity_frequency(w0, k_hat, w_frame, -1).omega;
    expect(testutil::rel_diff(up + dn, 2.0 * w0) < 1e-14,
           "helicity shift antisymmetry");

    const MediumParams m{rng.uniform(0.5, 4.0), rng.uniform(0.5, 4.0)};
    const double wz = rng.uniform(-1e3, 1e3);
    expect(dispersion_axial(w0, wz, m, +1) == dispersion_axial(w0, -wz, m, -1),
           "axial dispersion parity");
  }

  // Exterior gravitomagnetic field identities at FD order 2.
  const auto b_fn = [&](const Vec3& p) { return gem_fields(earth, p).B; };
  const auto chi_fn = [&](const Vec3& p) {
    return gravitomagnetic_scalar_potential(earth, p);
  };
  for (int trial = 0; trial < 20; ++trial) {
    Vec3 x = rng.vec3(-4, 4) * earth.body_radius;
    while (norm(x) < 1.5 * earth.body_radius) x = 2.0 * x;
    const double h1 = 0.01 * norm(x), h2 = 0.5 * h1;
    const Vec3 B = gem_fields(earth, x).B;
    const double scale = norm(B) / norm(x);

    const double div1 = std::abs(testutil::fd_divergence(b_fn, x, h1));
    const double div2 = std::abs(testutil::fd_divergence(b_fn, x, h2));
    expect(div1 < 1e-2 * scale && div2 < 0.35 * div1 + 1e-13 * scale,
           "div B_g = 0 at order 2");
    const double curl1 = norm(testutil::fd_curl(b_fn, x, h1));
    const double curl2 = norm(testutil::fd_curl(b_fn, x, h2));
    expect(curl1 < 1e-2 * scale && curl2 < 0.35 * curl1 + 1e-13 * scale,
           "curl B_g = 0 at order 2");
    const double grad1 = norm((-1.0) * testutil::fd_gradient(chi_fn, x, h1) - B);
    const double grad2 = norm((-1.0) * testutil::fd_gradient(chi_fn, x, h2) - B);
    expect(std::log2(grad1 / grad2) > 1.9, "B_g = -grad chi_g at order 2");
  }

  // RS compose/decompose round trips at 1e-13.
  for (int trial = 0; trial < 200; ++trial) {
    FieldTriplets f;
    const auto rc = [&](double s) {
      return CVec3{cplx(rng.uniform(-s, s), rng.uniform(-s, s)),
                   cplx(rng.uniform(-s, s), rng.uniform(-s, s)),
                   cplx(rng.uniform(-s, s), rng.uniform(-s, s))};
    };
    f.E = rc(10.0);
    f.B = rc(1e-7);
    f.D = rc(1e-10);
    f.H = rc(0.1);
    const double lambda = rng.log_uniform(1e-4, 1e-1);
    const FieldTriplets back = rs_decompose(rs_compose(f, lambda), lambda);
    const auto close = [](const CVec3& a, const CVec3& b) {
      return norm(a - b) <= 1e-13 * std::max(norm(a), norm(b));
    };
    expect(close(back.E, f.E) && close(back.B, f.B) && close(back.D, f.D) &&
               close(back.H, f.H),
           "RS round trip 1e-13");
  }

  return {ok, ok ? "all property families held" : "first failure: " + first_fail};
}

}  // namespace

int main() {
  std::printf("spinlight acceptance criteria\n");
  run_criterion(1, "spin-rotation energy scale (hbar Omega_earth ~ 5e-20 eV)",
                criterion_spin_rotation_scale);
  run_criterion(2, "spin-gravity energy scale (hbar |B_g|/c ~ 1e-29 eV)",
                criterion_spin_gravity_scale);
  run_criterion(3, "dispersion oracle equivalence (24 combinations, 1e-6)",
                criterion_dispersion_oracle);
  run_criterion(4, "curl residual convergence order and wrong-k plateau",
                criterion_residual_convergence);
  run_criterion(5, "rotational Doppler FFT pipeline (omega0 -/+ Omega)",
                criterion_rotational_doppler);
  run_criterion(6, "gravitational Faraday quadrature vs closed form",
                criterion_faraday);
  run_criterion(7, "constitutive pipeline equivalence and det identity",
                criterion_constitutive_pipeline);
  run_criterion(8, "property suites (Sagnac, antisymmetry, fields, RS)",
                criterion_property_suites);
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
