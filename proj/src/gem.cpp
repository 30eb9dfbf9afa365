// spinlight - gravitoelectromagnetism of a slowly rotating mass

#include "spinlight/gem.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "spinlight/errors.hpp"
#include "spinlight/fields.hpp"
#include "spinlight/numeric.hpp"

namespace spinlight {

void require_source(const GEMSource& src) {
  if (!(src.mass > 0.0) || !std::isfinite(src.mass))
    throw InvalidInputError("source mass must be positive");
  if (!(src.body_radius > 0.0) || !std::isfinite(src.body_radius))
    throw InvalidInputError("source body_radius must be positive");
  if (!is_finite(src.angular_momentum))
    throw InvalidInputError("source angular momentum must be finite");
}

namespace {

// The surface itself is allowed: the exterior multipole forms are evaluated
// down to |x| = body_radius.
void require_exterior(const GEMSource& src, const Vec3& x) {
  if (!is_finite(x)) throw InvalidInputError("position has non-finite components");
  if (norm(x) < src.body_radius)
    throw DomainError("point lies inside the source body");
}

}  // namespace

GEMPotentials gem_potentials(const GEMSource& src, const Vec3& x,
                             const Constants& k) {
  require_source(src);
  require_exterior(src, x);
  const double r = norm(x);
  GEMPotentials p;
  p.Phi = k.G_N * src.mass / r;
  p.A = (k.G_N / (k.c * r * r * r)) * cross(src.angular_momentum, x);
  return p;
}

GEMFields gem_fields(const GEMSource& src, const Vec3& x, const Constants& k) {
  require_source(src);
  require_exterior(src, x);
  const double r = norm(x);
  const double r3 = r * r * r;
  GEMFields f;
  f.E = (k.G_N * src.mass / r3) * x;
  const Vec3& J = src.angular_momentum;
  f.B = (k.G_N / (k.c * r3 * r * r)) * (3.0 * dot(J, x) * x - (r * r) * J);
  return f;
}

MetricComponents gem_metric(const GEMSource& src, const Event& at,
                            const Constants& k) {
  const GEMPotentials p = gem_potentials(src, at.position(), k);
  const double c2 = k.c * k.c;
  const double phi_ratio = p.Phi / c2;
  if (phi_ratio > 0.01)
    throw DomainError("Phi/c^2 > 0.01: outside the weak-field regime");

  MetricComponents out;
  out.g(0, 0) = -(1.0 - 2.0 * phi_ratio) * c2;
  const Vec3 g0 = (-2.0 / k.c) * p.A;
  out.g(0, 1) = out.g(1, 0) = g0.x;
  out.g(0, 2) = out.g(2, 0) = g0.y;
  out.g(0, 3) = out.g(3, 0) = g0.z;
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) out.g(a, b) = (a == b) ? 1.0 + 2.0 * phi_ratio : 0.0;
  return out;
}

Vec3 larmor_frequency(const Vec3& B_g, const Constants& k) {
  return (-1.0 / k.c) * B_g;
}

double spin_gravity_energy(const Vec3& spin, const Vec3& B_g, const Constants& k) {
  return dot(spin, B_g) / k.c;
}

double gravitomagnetic_dispersion(double omega, const GEMSource& src,
                                  const Vec3& x, const Vec3& n_hat, int helicity,
                                  const Constants& k) {
  require_helicity(helicity);
  if (!(omega > 0.0)) throw InvalidInputError("omega must be positive");
  if (std::abs(norm(n_hat) - 1.0) > 1e-12)
    throw InvalidInputError("n_hat must be a unit vector");
  const GEMFields f = gem_fields(src, x, k);
  return (omega - helicity * dot(n_hat, f.B) / k.c) / k.c;
}

double helicity_wavenumber_split(const GEMSource& src, const Vec3& x,
                                 const Vec3& n_hat, const Constants& k) {
  if (std::abs(norm(n_hat) - 1.0) > 1e-12)
    throw InvalidInputError("n_hat must be a unit vector");
  const GEMFields f = gem_fields(src, x, k);
  return dot(n_hat, f.B) / (k.c * k.c);
}

double gravitomagnetic_scalar_potential(const GEMSource& src, const Vec3& x,
                                        const Constants& k) {
  require_source(src);
  require_exterior(src, x);
  const double r = norm(x);
  return k.G_N * dot(src.angular_momentum, x) / (k.c * r * r * r);
}

namespace {

void require_axial_span(const GEMSource& src, double z_i, double z_f) {
  require_source(src);
  const Vec3& J = src.angular_momentum;
  const double j_perp = std::hypot(J.x, J.y);
  if (j_perp > 1e-12 * norm(J))
    throw InvalidInputError("axial Faraday rotation requires J along e_z");
  if (!(z_i >= src.body_radius))
    throw DomainError("initial point lies inside the source body");
  if (!(z_f >= z_i)) throw InvalidInputError("requires z_f >= z_i");
}

}  // namespace

double faraday_rotation_axial(const GEMSource& src, double z_i, double z_f,
                              const Constants& k) {
  require_axial_span(src, z_i, z_f);
  const double J = src.angular_momentum.z;
  const double inv_zf2 = std::isinf(z_f) ? 0.0 : 1.0 / (z_f * z_f);
  return k.G_N * J / (k.c * k.c * k.c) * (1.0 / (z_i * z_i) - inv_zf2);
}

double faraday_rotation_numeric(const GEMSource& src, double z_i, double z_f,
                                double omega, const Constants& k) {
  require_axial_span(src, z_i, z_f);
  if (!(omega > 0.0)) throw InvalidInputError("omega must be positive");
  if (z_f == z_i) return 0.0;

  // Delta = integral over [z_i, z_f] of (k_minus - k_plus)/2. Substituting
  // u = 1/z^2 (z = u^{-1/2}, dz = -u^{-3/2} du / 2) maps the tail to a
  // finite interval and keeps the integrand bounded.
  const Vec3 axis{0.0, 0.0, 1.0};
  const auto integrand_u = [&](double u) {
    const double z = 1.0 / std::sqrt(u);
    const double split = helicity_wavenumber_split(src, Vec3{0.0, 0.0, z}, axis, k);
    return 0.5 * split * std::pow(u, -1.5);
  };
  const double u_i = 1.0 / (z_i * z_i);
  const double u_f = std::isinf(z_f) ? 0.0 : 1.0 / (z_f * z_f);
  return adaptive_gauss_kronrod(integrand_u, u_f, u_i, 1e-10);
}

std::map<std::string, GEMSource> builtin_source_catalog() {
  std::map<std::string, GEMSource> cat;
  cat["earth"] = GEMSource{5.972e24, Vec3{0.0, 0.0, 5.86e33}, 6.371e6};
  return cat;
}

std::map<std::string, GEMSource> load_source_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open source catalog: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("catalog is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw InvalidInputError("catalog root must be an object");

  std::map<std::string, GEMSource> cat = builtin_source_catalog();
  for (const auto& [name, body] : doc.items()) {
    try {
      GEMSource src;
      src.mass = body.at("mass_kg").get<double>();
      const auto& j = body.at("angular_momentum_kg_m2_per_s");
      src.angular_momentum = {j.at(0).get<double>(), j.at(1).get<double>(),
                              j.at(2).get<double>()};
      src.body_radius = body.at("body_radius_m").get<double>();
      require_source(src);
      cat[name] = src;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInputError("catalog entry '" + name + "': " + e.what());
    }
  }
  return cat;
}

}  // namespace spinlight
