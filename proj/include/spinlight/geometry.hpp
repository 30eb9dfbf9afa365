// spinlight - stationary spacetimes in lapse-shift form, rotating frames,
// observer tetrads

#pragma once

#include <functional>

#include "spinlight/constants.hpp"
#include "spinlight/linalg.hpp"

namespace spinlight {

// Spacetime point in coordinates (t, x, y, z). The same type carries
// inertial and rotating-frame events; the frame is decided by context.
// Coordinate convention throughout: x^0 = t in seconds, so g_00 carries c^2
// and line elements are in m^2.
struct Event {
  double t = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 position() const { return {x, y, z}; }
};

inline bool is_finite(const Event& e) {
  return std::isfinite(e.t) && is_finite(e.position());
}

// Stationary metric in lapse / shift / spatial-metric form:
//   ds^2 = -V^2 c^2 dt^2 + g_ab (dx^a - K^a c dt)(dx^b - K^b c dt),
// with V > 0 and g_ab symmetric positive definite wherever evaluated.
// The fields are functions of position only (stationarity).
struct ADMForm {
  std::function<double(const Vec3&)> lapse;
  std::function<Vec3(const Vec3&)> shift;
  std::function<Mat3(const Vec3&)> spatial_metric;
};

// Full 4x4 metric components in (t, x, y, z); symmetric, signature (-,+,+,+),
// det < 0 in the admissible region.
struct MetricComponents {
  Mat4 g;
};

// Orthonormal observer frame: e[0] timelike with g(e0, e0) = -c^2, spatial
// legs unit and mutually orthogonal.
struct Tetrad {
  std::array<Vec4, 4> e{};
};

// u^mu = gamma (1, v) with g_{mu nu} u^mu u^nu = -c^2.
struct FourVelocity {
  double gamma = 1.0;
  Vec3 v{};

  Vec4 components() const { return Vec4{{gamma, gamma * v.x, gamma * v.y, gamma * v.z}}; }
};

// Assembles the 4x4 metric from ADM data evaluated at `at`:
//   g_00 = -V^2 c^2 + g_ab (c K^a)(c K^b),  g_0a = -c g_ab K^b,  g_ab = g_ab.
// Throws InvalidInputError for V <= 0 or non-SPD spatial metric, and
// DomainError when the point is at or beyond the admissibility margin
// (g_ab K^a K^b >= margin^2 V^2; for the rotating frame this is the light
// cylinder rho = c/Omega).
MetricComponents adm_to_metric(const ADMForm& adm, const Event& at,
                               const Constants& k = {},
                               const NumericPolicy& policy = {});

// Flat spacetime: V = 1, K = 0, g_ab = delta_ab.
ADMForm minkowski_adm();

// Frame rotating rigidly with angular velocity Omega:
// V = 1, g_ab = delta_ab, K(r) = -(Omega x r)/c.
ADMForm rotating_frame_adm(const Vec3& omega, const Constants& k = {});

// Coordinate change between the inertial frame and the frame rotating at
// Omega_z about the z axis. The spatial rotation is by angle Omega_z * t;
// t is shared. The two maps are mutual inverses.
Event inertial_to_rotating(const Event& e, double omega_z);
Event rotating_to_inertial(const Event& e, double omega_z);

// Orthonormal frame of the observer at rest at the spatial origin referring
// its measurements to axes rotating at Omega_z, expressed in inertial
// coordinates. Exact by construction.
Tetrad rotating_observer_tetrad(double omega_z, double t);

// Frame-comoving orthonormal tetrad at a field point of the rotating frame,
// in rotating coordinates: e_t = (1, c K^a), e_a = coordinate axes. Only
// supported for V = 1, g_ab = delta_ab (the rotating-frame form); other
// metrics throw DomainError. Field-point tetrads are provided in rotating
// coordinates only; no inertial-frame extension off the rotation axis is
// defined here.
Tetrad fermi_tetrad(const ADMForm& adm, const Event& at, const Constants& k = {},
                    const NumericPolicy& policy = {});

// Lorentz factor of a worldline with coordinate 3-velocity v at `at`:
//   gamma^-2 = V^2 - g_ab (v^a - c K^a)(v^b - c K^b) / c^2.
// Throws DomainError when the motion is null or spacelike.
double lorentz_factor(const ADMForm& adm, const Vec3& v, const Event& at,
                      const Constants& k = {});

FourVelocity four_velocity(const ADMForm& adm, const Vec3& v, const Event& at,
                           const Constants& k = {});

// 4-velocity of the observer comoving with the frame (v = c K).
FourVelocity comoving_four_velocity(const ADMForm& adm, const Event& at,
                                    const Constants& k = {});

// --- invariant checks (used by tests and by callers that need validation) ---

// Max scaled violation of g(e0,e0) = -c^2, g(ea,eb) = delta, g(e0,ea) = 0.
double tetrad_orthonormality_error(const Tetrad& tet, const MetricComponents& g,
                                   const Constants& k = {});

// Count of negative eigenvalues after rescaling the time row/column by 1/c;
// a Lorentzian metric gives 1.
int metric_negative_eigenvalue_count(const MetricComponents& g,
                                     const Constants& k = {});

// Residual of the normalization g(u, u) = -c^2, scaled by c^2 gamma^2.
double four_velocity_normalization_error(const FourVelocity& u,
                                         const MetricComponents& g,
                                         const Constants& k = {});

}  // namespace spinlight
