#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinlight/errors.hpp"
#include "spinlight/geometry.hpp"
#include "test_helpers.hpp"

using namespace spinlight;
using testutil::Rng;

namespace {

const Constants kSI{};

// Algebraic inversion of the lapse-shift assembly, used as an independent
// oracle for adm_to_metric.
struct AdmData {
  double lapse;
  Vec3 shift;
  Mat3 gamma;
};

AdmData reconstruct_adm(const MetricComponents& g, double c) {
  AdmData out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.gamma(a, b) = g.g(a + 1, b + 1);
  const Vec3 g0{g.g(0, 1), g.g(0, 2), g.g(0, 3)};
  out.shift = (-1.0 / c) * (inverse(out.gamma) * g0);
  const Vec3 gk = out.gamma * out.shift;
  out.lapse = std::sqrt((c * c * dot(out.shift, gk) - g.g(0, 0)) / (c * c));
  return out;
}

// Random well-conditioned ADM data as position-independent fields.
ADMForm random_adm(Rng& rng, AdmData& data_out) {
  AdmData d;
  d.lapse = rng.uniform(0.5, 2.0);
  // SPD spatial metric: L L^T + small diagonal bump.
  Mat3 L{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) L(i, j) = rng.uniform(i == j ? 0.5 : -0.3, i == j ? 1.5 : 0.3);
  Mat3 g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += L(i, k) * L(j, k);
      g(i, j) = s;
    }
  d.gamma = g;
  // Shift kept well inside the admissibility margin.
  Vec3 shift = rng.vec3(-0.3, 0.3);
  while (dot(shift, g * shift) >= 0.5 * d.lapse * d.lapse) shift = 0.5 * shift;
  d.shift = shift;
  data_out = d;

  ADMForm adm;
  adm.lapse = [d](const Vec3&) { return d.lapse; };
  adm.shift = [d](const Vec3&) { return d.shift; };
  adm.spatial_metric = [d](const Vec3&) { return d.gamma; };
  return adm;
}

}  // namespace

TEST_CASE("adm_to_metric: Minkowski data gives diag(-c^2, 1, 1, 1)") {
  const MetricComponents g = adm_to_metric(minkowski_adm(), Event{0, 1, 2, 3});
  CHECK(g.g(0, 0) == -kSI.c * kSI.c);
  for (int a = 1; a < 4; ++a) {
    CHECK(g.g(0, a) == 0.0);
    for (int b = 1; b < 4; ++b) CHECK(g.g(a, b) == (a == b ? 1.0 : 0.0));
  }
}

TEST_CASE("adm_to_metric: rotating frame reproduces the rotating metric") {
  const double omega = 10.0;
  const ADMForm adm = rotating_frame_adm({0, 0, omega});
  const Event at{0.0, 2.0e5, -1.0e5, 3.0e5};
  const MetricComponents g = adm_to_metric(adm, at);

  const Vec3 K = (-1.0 / kSI.c) * cross(Vec3{0, 0, omega}, at.position());
  const double K2 = norm2(K);
  CHECK(g.g(0, 0) == doctest::Approx(-kSI.c * kSI.c * (1.0 - K2)).epsilon(1e-14));
  CHECK(g.g(0, 1) == doctest::Approx(-kSI.c * K.x).epsilon(1e-14));
  CHECK(g.g(0, 2) == doctest::Approx(-kSI.c * K.y).epsilon(1e-14));
  CHECK(g.g(0, 3) == 0.0);
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) CHECK(g.g(a, b) == (a == b ? 1.0 : 0.0));

  CHECK(metric_negative_eigenvalue_count(g) == 1);
  CHECK(det(g.g) < 0.0);
}

TEST_CASE("adm_to_metric: random ADM round-trips through the metric") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    AdmData d;
    const ADMForm adm = random_adm(rng, d);
    const Event at{rng.uniform(-1, 1), rng.uniform(-5, 5), rng.uniform(-5, 5),
                   rng.uniform(-5, 5)};
    const MetricComponents g = adm_to_metric(adm, at);
    CHECK(is_symmetric(g.g));

    const AdmData back = reconstruct_adm(g, kSI.c);
    CHECK(testutil::rel_diff(back.lapse, d.lapse) < 1e-12);
    CHECK(norm(back.shift - d.shift) < 1e-12 * (1.0 + norm(d.shift)));
    CHECK(max_abs(back.gamma - d.gamma) < 1e-12 * max_abs(d.gamma));
  }
}

TEST_CASE("adm_to_metric: errors") {
  ADMForm bad = minkowski_adm();
  bad.lapse = [](const Vec3&) { return -1.0; };
  CHECK_THROWS_AS(adm_to_metric(bad, Event{}), InvalidInputError);

  ADMForm indef = minkowski_adm();
  indef.spatial_metric = [](const Vec3&) {
    Mat3 m = Mat3::identity();
    m(2, 2) = -1.0;
    return m;
  };
  CHECK_THROWS_AS(adm_to_metric(indef, Event{}), InvalidInputError);

  CHECK_THROWS_AS(
      adm_to_metric(minkowski_adm(),
                    Event{0.0, std::numeric_limits<double>::quiet_NaN(), 0, 0}),
      InvalidInputError);

  // At and beyond the admissibility margin of the light cylinder.
  const double omega = 1.0;
  const ADMForm rot = rotating_frame_adm({0, 0, omega});
  const double rho_limit = 0.999 * kSI.c / omega;
  CHECK_THROWS_AS(adm_to_metric(rot, Event{0, rho_limit * 1.0001, 0, 0}),
                  DomainError);
  CHECK_NOTHROW(adm_to_metric(rot, Event{0, rho_limit * 0.99, 0, 0}));
}

TEST_CASE("rotating_frame_adm: shift field") {
  const ADMForm none = rotating_frame_adm({0, 0, 0});
  CHECK(norm(none.shift({3, 4, 5})) == 0.0);

  const double omega = 7.0;
  const ADMForm adm = rotating_frame_adm({0, 0, omega});
  const Vec3 K = adm.shift({2.0, -3.0, 1.0});
  CHECK(K.x == doctest::Approx(omega * -3.0 / kSI.c).epsilon(1e-15));
  CHECK(K.y == doctest::Approx(-omega * 2.0 / kSI.c).epsilon(1e-15));
  CHECK(K.z == 0.0);

  // |K| = Omega rho / c; at the light cylinder it reaches exactly 1.
  const double rho = kSI.c / omega;
  CHECK(norm(adm.shift({rho, 0, 0})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm(adm.shift({0.5 * rho, 0, 0})) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("inertial<->rotating coordinate transformation") {
  // t0 = 0 leaves space untouched.
  const Event e0 = inertial_to_rotating(Event{0.0, 1.5, -2.5, 3.5}, 123.0);
  CHECK(e0.x == 1.5);
  CHECK(e0.y == -2.5);
  CHECK(e0.z == 3.5);

  // Quarter turn: (1, 0) maps to (0, -1).
  const double omega = std::numbers::pi / 2.0;  // so Omega * t = pi/2 at t = 1
  const Event q = inertial_to_rotating(Event{1.0, 1.0, 0.0, 0.0}, omega);
  CHECK(std::abs(q.x) < 1e-15);
  CHECK(q.y == doctest::Approx(-1.0).epsilon(1e-15));

  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Event e{rng.uniform(-1e3, 1e3), rng.uniform(-1e6, 1e6),
                  rng.uniform(-1e6, 1e6), rng.uniform(-1e6, 1e6)};
    const double w = rng.uniform(-10, 10);
    const Event back = rotating_to_inertial(inertial_to_rotating(e, w), w);
    CHECK(std::abs(back.t - e.t) <= 1e-14 * std::abs(e.t));
    CHECK(std::abs(back.x - e.x) <= 1e-14 * 1e6);
    CHECK(std::abs(back.y - e.y) <= 1e-14 * 1e6);
    CHECK(std::abs(back.z - e.z) <= 1e-14 * 1e6);
  }
}

TEST_CASE("rotation Jacobian has unit determinant") {
  // Columns of the spatial Jacobian of rotating_to_inertial at fixed t.
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const double w = rng.uniform(-100, 100);
    const double t = rng.uniform(-10, 10);
    const double c = std::cos(w * t), s = std::sin(w * t);
    Mat3 jac{};
    jac(0, 0) = c;  jac(0, 1) = -s; jac(1, 0) = s; jac(1, 1) = c; jac(2, 2) = 1.0;
    CHECK(std::abs(det(jac) - 1.0) < 1e-15);
  }
}

TEST_CASE("rotating metric is the pullback of Minkowski under the rotation") {
  Rng rng(13);
  const double c = kSI.c;
  for (int trial = 0; trial < 25; ++trial) {
    const double omega = rng.log_uniform(1e-3, 1e2);
    const Event rot{rng.uniform(-1, 1), rng.uniform(-1e4, 1e4),
                    rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    const MetricComponents g =
        adm_to_metric(rotating_frame_adm({0, 0, omega}), rot);

    // Jacobian d(inertial)/d(rotating) at the event.
    const Event inert = rotating_to_inertial(rot, omega);
    const double cth = std::cos(omega * rot.t), sth = std::sin(omega * rot.t);
    Mat4 J{};
    J(0, 0) = 1.0;
    J(1, 0) = -omega * inert.y;
    J(2, 0) = omega * inert.x;
    J(1, 1) = cth;  J(1, 2) = -sth;
    J(2, 1) = sth;  J(2, 2) = cth;
    J(3, 3) = 1.0;

    Mat4 eta{};
    eta(0, 0) = -c * c;
    eta(1, 1) = eta(2, 2) = eta(3, 3) = 1.0;

    // (J^T eta J)_{mu nu}
    Mat4 pullback{};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) s += J(a, mu) * eta(a, b) * J(b, nu);
        pullback(mu, nu) = s;
      }
    CHECK(max_abs(pullback - g.g) <= 1e-10 * max_abs(g.g));
  }
}

TEST_CASE("rotating_observer_tetrad") {
  const Tetrad id = rotating_observer_tetrad(5.0, 0.0);
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) CHECK(id.e[a][mu] == (a == mu ? 1.0 : 0.0));

  // Omega t = pi/2 swings e_1 onto the inertial y axis.
  const double omega = std::numbers::pi / 2.0;
  const Tetrad q = rotating_observer_tetrad(omega, 1.0);
  CHECK(std::abs(q.e[1][1]) < 1e-15);
  CHECK(q.e[1][2] == doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(17);
  const MetricComponents mink = adm_to_metric(minkowski_adm(), Event{});
  for (int trial = 0; trial < 25; ++trial) {
    const Tetrad tet =
        rotating_observer_tetrad(rng.uniform(-1e3, 1e3), rng.uniform(-10, 10));
    CHECK(tetrad_orthonormality_error(tet, mink) < 1e-12);
  }
}

TEST_CASE("fermi_tetrad") {
  const ADMForm flat = minkowski_adm();
  const Tetrad coord = fermi_tetrad(flat, Event{0, 1, 1, 1});
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) CHECK(coord.e[a][mu] == (a == mu ? 1.0 : 0.0));

  const double omega = 3.0;
  const ADMForm rot = rotating_frame_adm({0, 0, omega});
  const Event at{0.0, 2.0e4, 5.0e4, -1.0e4};
  const Tetrad tet = fermi_tetrad(rot, at);
  CHECK(tet.e[0][0] == 1.0);
  CHECK(tet.e[0][1] == doctest::Approx(omega * at.y).epsilon(1e-14));
  CHECK(tet.e[0][2] == doctest::Approx(-omega * at.x).epsilon(1e-14));
  CHECK(tet.e[0][3] == 0.0);

  // Orthonormal against the assembled rotating metric anywhere inside the
  // cylinder.
  Rng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const double w = rng.log_uniform(1e-2, 1e2);
    const double rho_max = 0.98 * kSI.c / w;
    const Event e{0.0, rng.uniform(-rho_max / 2, rho_max / 2),
                  rng.uniform(-rho_max / 2, rho_max / 2), rng.uniform(-1e3, 1e3)};
    const ADMForm adm = rotating_frame_adm({0, 0, w});
    const Tetrad t = fermi_tetrad(adm, e);
    const MetricComponents g = adm_to_metric(adm, e);
    CHECK(tetrad_orthonormality_error(t, g) < 1e-12);
  }

  // Only the V = 1, flat-space form is supported.
  ADMForm curved = minkowski_adm();
  curved.lapse = [](const Vec3&) { return 0.5; };
  CHECK_THROWS_AS(fermi_tetrad(curved, Event{}), DomainError);
}

TEST_CASE("lorentz_factor") {
  // Comoving with the frame: gamma = 1.
  const ADMForm rot = rotating_frame_adm({0, 0, 2.0});
  const Event at{0, 1e4, -2e4, 0};
  const Vec3 v = kSI.c * rot.shift(at.position());
  CHECK(lorentz_factor(rot, v, at) == doctest::Approx(1.0).epsilon(1e-14));

  // Special-relativistic value at 0.6 c.
  const double g = lorentz_factor(minkowski_adm(), {0.6 * kSI.c, 0, 0}, Event{});
  CHECK(g == doctest::Approx(1.25).epsilon(1e-14));

  // Static observer in the rotating frame: gamma = (1 - (Omega rho / c)^2)^(-1/2).
  const double omega = 5.0, rho = 0.4 * kSI.c / omega;
  const double expected = 1.0 / std::sqrt(1.0 - omega * omega * rho * rho /
                                                    (kSI.c * kSI.c));
  CHECK(lorentz_factor(rotating_frame_adm({0, 0, omega}), {0, 0, 0},
                       Event{0, rho, 0, 0}) ==
        doctest::Approx(expected).epsilon(1e-13));

  CHECK_THROWS_AS(lorentz_factor(minkowski_adm(), {kSI.c, 0, 0}, Event{}),
                  DomainError);
  CHECK_THROWS_AS(lorentz_factor(minkowski_adm(), {1.5 * kSI.c, 0, 0}, Event{}),
                  DomainError);
}

TEST_CASE("four-velocity normalization") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    AdmData d;
    const ADMForm adm = random_adm(rng, d);
    const Event at{};
    // Velocity near the frame velocity keeps gamma modest.
    const Vec3 v = kSI.c * d.shift + rng.vec3(-0.2 * kSI.c, 0.2 * kSI.c);
    const FourVelocity u = four_velocity(adm, v, at);
    const MetricComponents g = adm_to_metric(adm, at);
    CHECK(four_velocity_normalization_error(u, g) < 1e-12);
  }

  const FourVelocity com =
      comoving_four_velocity(rotating_frame_adm({0, 0, 3.0}), Event{0, 1e5, 0, 0});
  CHECK(com.gamma == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(com.v.y == doctest::Approx(-3.0 * 1e5).epsilon(1e-14));
}
