// spinlight - scenario configs, physics pipeline runners, table output

#include "spinlight/scenario.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include "spinlight/errors.hpp"
#include "spinlight/gem.hpp"
#include "spinlight/kinematics.hpp"
#include "spinlight/solver.hpp"

namespace spinlight {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Table::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string Table::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < columns.size(); ++i)
      obj[columns[i]] = row[i].empty() ? nlohmann::ordered_json(nullptr)
                                       : nlohmann::ordered_json(row[i]);
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

namespace {

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

const json& require_field(const json& cfg, const std::string& key,
                          const std::string& where) {
  auto it = cfg.find(key);
  if (it == cfg.end()) config_fail(where, "missing required field '" + key + "'");
  return *it;
}

double get_number(const json& v, const std::string& where) {
  if (!v.is_number()) config_fail(where, "expected a number");
  return v.get<double>();
}

double get_positive(const json& v, const std::string& where) {
  const double x = get_number(v, where);
  if (!(x > 0.0)) config_fail(where, "must be > 0");
  return x;
}

// A scalar field or an array of scalars both parse to a list.
std::vector<double> get_number_list(const json& v, const std::string& where) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i)
      out.push_back(get_number(v[i], where + "[" + std::to_string(i) + "]"));
  } else {
    config_fail(where, "expected a number or an array of numbers");
  }
  if (out.empty()) config_fail(where, "must not be empty");
  return out;
}

Vec3 get_vec3(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3)
    config_fail(where, "expected an array of 3 numbers");
  return {get_number(v[0], where + "[0]"), get_number(v[1], where + "[1]"),
          get_number(v[2], where + "[2]")};
}

std::vector<int> get_helicities(const json& cfg, const std::string& where) {
  std::vector<int> out;
  const json& v = require_field(cfg, "helicities", where);
  for (double d : get_number_list(v, where + ".helicities")) {
    const int h = static_cast<int>(d);
    if ((h != 1 && h != -1) || d != h)
      config_fail(where + ".helicities", "entries must be +1 or -1");
    out.push_back(h);
  }
  return out;
}

MediumParams get_medium(const json& v, const std::string& where) {
  MediumParams m;
  m.eps = get_positive(require_field(v, "eps_rel", where), where + ".eps_rel");
  m.mu = get_positive(require_field(v, "mu_rel", where), where + ".mu_rel");
  return m;
}

std::vector<MediumParams> get_media(const json& cfg, const std::string& where) {
  std::vector<MediumParams> out;
  const json& v = require_field(cfg, "media", where);
  if (!v.is_array() || v.empty())
    config_fail(where + ".media", "expected a non-empty array of media");
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_medium(v[i], where + ".media[" + std::to_string(i) + "]"));
  return out;
}

GEMSource get_source(const json& cfg, const std::string& where) {
  const json& v = require_field(cfg, "source", where);
  if (v.is_string()) {
    std::map<std::string, GEMSource> cat;
    if (cfg.contains("catalog_path"))
      cat = load_source_catalog(cfg.at("catalog_path").get<std::string>());
    else
      cat = builtin_source_catalog();
    const auto it = cat.find(v.get<std::string>());
    if (it == cat.end())
      config_fail(where + ".source",
                  "unknown catalog entry '" + v.get<std::string>() + "'");
    return it->second;
  }
  if (!v.is_object())
    config_fail(where + ".source", "expected a catalog name or an object");
  GEMSource src;
  src.mass = get_positive(require_field(v, "mass_kg", where + ".source"),
                          where + ".source.mass_kg");
  src.angular_momentum = get_vec3(
      require_field(v, "angular_momentum_kg_m2_per_s", where + ".source"),
      where + ".source.angular_momentum_kg_m2_per_s");
  src.body_radius =
      get_positive(require_field(v, "body_radius_m", where + ".source"),
                   where + ".source.body_radius_m");
  return src;
}

}  // namespace

Constants apply_constants_overrides(const Constants& base, const json& overrides) {
  if (!overrides.is_object())
    throw ConfigError("constants: expected an object of overrides");
  Constants k = base;
  for (const auto& [key, value] : overrides.items()) {
    const double v = get_positive(value, "constants." + key);
    if (key == "c_m_per_s")
      k.c = v;
    else if (key == "mu0_H_per_m")
      k.mu0 = v;
    else if (key == "eps0_F_per_m")
      k.eps0 = v;
    else if (key == "G_N_m3_per_kg_s2")
      k.G_N = v;
    else if (key == "hbar_J_s")
      k.hbar = v;
    else
      throw ConfigError("constants: unknown override '" + key + "'");
  }
  return k;
}

Scenario load_scenario(const std::string& command, const std::string& config_path) {
  Scenario s;
  s.command = command;
  std::ifstream in(config_path);
  if (!in) throw ConfigError("cannot open config file: " + config_path);
  try {
    in >> s.config;
  } catch (const json::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  if (!s.config.is_object()) throw ConfigError("config root must be an object");

  Constants k;
  if (const char* env = std::getenv("SPINLIGHT_CONSTANTS")) {
    std::ifstream cin_file(env);
    if (!cin_file)
      throw ConfigError(std::string("cannot open constants file: ") + env);
    json overrides;
    try {
      cin_file >> overrides;
    } catch (const json::exception& e) {
      throw ConfigError("constants file is not valid JSON: " + std::string(e.what()));
    }
    k = apply_constants_overrides(k, overrides);
  }
  if (s.config.contains("constants"))
    k = apply_constants_overrides(k, s.config.at("constants"));
  s.constants = k;
  return s;
}

Table run_dispersion(const json& cfg, const Constants& k) {
  const std::string where = "dispersion";
  const auto omegas = get_number_list(
      require_field(cfg, "omega_rad_per_s", where), where + ".omega_rad_per_s");
  const auto frame_rates =
      get_number_list(require_field(cfg, "frame_rotation_rad_per_s", where),
                      where + ".frame_rotation_rad_per_s");
  const auto media = get_media(cfg, where);
  const auto helicities = get_helicities(cfg, where);
  for (double w : omegas)
    if (!(w > 0.0)) config_fail(where + ".omega_rad_per_s", "must be > 0");

  bool recover = false;
  int grid_points = 17;
  if (cfg.contains("recover")) {
    recover = true;
    const json& r = cfg.at("recover");
    if (r.contains("points_per_axis")) {
      grid_points = r.at("points_per_axis").get<int>();
      if (grid_points < 5)
        config_fail(where + ".recover.points_per_axis", "must be >= 5");
    }
  }

  Table t;
  t.columns = {"helicity",          "omega_rad_per_s", "Omega_rad_per_s",
               "n",                 "k_closed_rad_per_m",
               "k_recovered_rad_per_m", "rel_diff"};
  for (double omega : omegas)
    for (double omega_z : frame_rates)
      for (const MediumParams& m : media)
        for (int h : helicities) {
          const double k_closed = dispersion_axial(omega, omega_z, m, h, k);
          std::string k_rec, rel;
          if (recover) {
            const GridSpec grid = dispersion_recovery_grid(omega, m, k, grid_points);
            const double kr = dispersion_recover(omega, omega_z, m, h, grid, k);
            k_rec = format_double(kr);
            rel = format_double(std::abs(kr - k_closed) / k_closed);
          }
          t.rows.push_back({format_double(h), format_double(omega),
                            format_double(omega_z),
                            format_double(m.refractive_index()),
                            format_double(k_closed), k_rec, rel});
        }
  return t;
}

Table run_gyro_signal(const json& cfg, const Constants& k) {
  const std::string where = "gyro-signal";
  const auto lengths = get_number_list(require_field(cfg, "path_length_m", where),
                                       where + ".path_length_m");
  const auto frame_rates =
      get_number_list(require_field(cfg, "frame_rotation_rad_per_s", where),
                      where + ".frame_rotation_rad_per_s");
  const auto media = get_media(cfg, where);
  for (double L : lengths)
    if (!(L > 0.0)) config_fail(where + ".path_length_m", "must be > 0");

  Table t;
  t.columns = {"L_m",        "n",          "Omega_rad_per_s", "delta_k_rad_per_m",
               "delta_phi_rad", "polarization_rotation_rad"};
  for (double L : lengths)
    for (const MediumParams& m : media)
      for (double omega_z : frame_rates) {
        const double n = m.refractive_index();
        // k+ - k- formed directly; subtracting the two branches would lose
        // the split at optical frequencies.
        const double delta_k = 2.0 * n * omega_z / k.c;
        t.rows.push_back({format_double(L), format_double(n),
                          format_double(omega_z), format_double(delta_k),
                          format_double(delta_k * L),
                          format_double(-n * omega_z * L / k.c)});
      }
  return t;
}

Table run_residual(const json& cfg, const Constants& k) {
  const std::string where = "residual";
  const double omega = get_positive(require_field(cfg, "omega_rad_per_s", where),
                                    where + ".omega_rad_per_s");
  const double omega_z =
      get_number(require_field(cfg, "frame_rotation_rad_per_s", where),
                 where + ".frame_rotation_rad_per_s");
  const MediumParams m =
      get_medium(require_field(cfg, "medium", where), where + ".medium");
  const auto helicities = get_helicities(cfg, where);

  int points = 17;
  double box_wavelengths = 1.0;
  if (cfg.contains("grid")) {
    const json& g = cfg.at("grid");
    if (g.contains("points_per_axis")) points = g.at("points_per_axis").get<int>();
    if (g.contains("box_side_wavelengths"))
      box_wavelengths = get_positive(g.at("box_side_wavelengths"),
                                     where + ".grid.box_side_wavelengths");
  }
  if (points < 5) config_fail(where + ".grid.points_per_axis", "must be >= 5");

  Table t;
  t.columns = {"helicity", "omega_rad_per_s", "Omega_rad_per_s", "n",
               "k_rad_per_m", "h_m", "max_norm", "l2_norm", "order_estimate"};
  for (int h : helicities) {
    const double k_mode = cfg.contains("wavenumber_rad_per_m")
                              ? get_positive(cfg.at("wavenumber_rad_per_m"),
                                             where + ".wavenumber_rad_per_m")
                              : dispersion_axial(omega, omega_z, m, h, k);
    const double lambda_medium =
        2.0 * std::numbers::pi * k.c / (m.refractive_index() * omega);
    GridSpec grid;
    grid.points = {points, points, points};
    const double half = 0.5 * box_wavelengths * lambda_medium;
    grid.half_extent = {half, half, half};

    HelicityMode mode{h, omega, k_mode, 1.0, m, omega_z};
    const FieldFunction field = [&, mode](const Vec3& r) {
      return ansatz_field(mode, Event{0.0, r.x, r.y, r.z}, k);
    };
    const TensorFunction tensors = [&, m, omega_z](const Vec3& r) {
      return rotating_constitutive_linear(Vec3{0.0, 0.0, omega_z}, m,
                                          Event{0.0, r.x, r.y, r.z}, k);
    };
    const ResidualReport rep =
        curl_residual(field, h, omega, tensors, grid, omega_z, k);
    t.rows.push_back({format_double(h), format_double(omega),
                      format_double(omega_z),
                      format_double(m.refractive_index()), format_double(k_mode),
                      format_double(grid_spacing(grid).z),
                      format_double(rep.max_norm), format_double(rep.l2_norm),
                      format_double(rep.order_estimate)});
  }
  return t;
}

Table run_doppler(const json& cfg, const Constants& k) {
  const std::string where = "doppler";
  const double omega0 = get_positive(require_field(cfg, "omega0_rad_per_s", where),
                                     where + ".omega0_rad_per_s");
  const Vec3 omega = get_vec3(require_field(cfg, "Omega_rad_per_s", where),
                              where + ".Omega_rad_per_s");
  const Vec3 r =
      get_vec3(require_field(cfg, "position_m", where), where + ".position_m");
  Vec3 k_dir = get_vec3(require_field(cfg, "k0_direction", where),
                        where + ".k0_direction");
  if (norm(k_dir) == 0.0) config_fail(where + ".k0_direction", "must be nonzero");
  k_dir = normalized(k_dir);
  const auto helicities = get_helicities(cfg, where);

  Table t;
  t.columns = {"helicity", "omega0_rad_per_s", "omega_doppler_rad_per_s",
               "omega_helicity_rad_per_s", "energy_total_J"};
  for (int h : helicities) {
    RayState s;
    s.omega0 = omega0;
    s.k0 = (omega0 / k.c) * k_dir;
    s.r = r;
    s.omega = omega;
    s.helicity = h;
    const double wd = doppler_frequency(s, k);
    const double wh = helicity_frequency(omega0, k_dir, omega, h).omega;
    const double e = energy_total(s, k);
    t.rows.push_back({format_double(h), format_double(omega0), format_double(wd),
                      format_double(wh), format_double(e)});
  }
  return t;
}

Table run_sagnac(const json& cfg, const Constants& k) {
  const std::string where = "sagnac";
  const auto omegas = get_number_list(
      require_field(cfg, "omega0_rad_per_s", where), where + ".omega0_rad_per_s");
  const Vec3 omega = get_vec3(require_field(cfg, "Omega_rad_per_s", where),
                              where + ".Omega_rad_per_s");
  const json& areas_j = require_field(cfg, "areas_m2", where);
  if (!areas_j.is_array() || areas_j.empty())
    config_fail(where + ".areas_m2", "expected a non-empty array of 3-vectors");
  std::vector<Vec3> areas;
  for (std::size_t i = 0; i < areas_j.size(); ++i)
    areas.push_back(
        get_vec3(areas_j[i], where + ".areas_m2[" + std::to_string(i) + "]"));

  Table t;
  t.columns = {"omega0_rad_per_s", "area_x_m2", "area_y_m2", "area_z_m2",
               "delta_phi_rad"};
  for (double w0 : omegas) {
    if (!(w0 > 0.0)) config_fail(where + ".omega0_rad_per_s", "must be > 0");
    for (const Vec3& a : areas)
      t.rows.push_back({format_double(w0), format_double(a.x), format_double(a.y),
                        format_double(a.z),
                        format_double(sagnac_phase(w0, omega, a, k))});
  }
  return t;
}

Table run_gem_field(const json& cfg, const Constants& k) {
  const std::string where = "gem-field";
  const GEMSource src = get_source(cfg, where);
  const json& pos_j = require_field(cfg, "positions_m", where);
  if (!pos_j.is_array() || pos_j.empty())
    config_fail(where + ".positions_m", "expected a non-empty array of 3-vectors");

  Table t;
  t.columns = {"x_m",   "y_m",   "z_m",   "Phi_g_m2_per_s2", "A_g_x_m2_per_s2",
               "A_g_y_m2_per_s2", "A_g_z_m2_per_s2", "E_g_x_m_per_s2",
               "E_g_y_m_per_s2", "E_g_z_m_per_s2", "B_g_x_m_per_s2",
               "B_g_y_m_per_s2", "B_g_z_m_per_s2", "chi_g_m2_per_s2"};
  for (std::size_t i = 0; i < pos_j.size(); ++i) {
    const Vec3 x =
        get_vec3(pos_j[i], where + ".positions_m[" + std::to_string(i) + "]");
    const GEMPotentials p = gem_potentials(src, x, k);
    const GEMFields f = gem_fields(src, x, k);
    const double chi = gravitomagnetic_scalar_potential(src, x, k);
    t.rows.push_back({format_double(x.x), format_double(x.y), format_double(x.z),
                      format_double(p.Phi), format_double(p.A.x),
                      format_double(p.A.y), format_double(p.A.z),
                      format_double(f.E.x), format_double(f.E.y),
                      format_double(f.E.z), format_double(f.B.x),
                      format_double(f.B.y), format_double(f.B.z),
                      format_double(chi)});
  }
  return t;
}

Table run_faraday(const json& cfg, const Constants& k) {
  const std::string where = "faraday";
  const GEMSource src = get_source(cfg, where);
  const double omega = get_positive(require_field(cfg, "omega_rad_per_s", where),
                                    where + ".omega_rad_per_s");
  const json& spans = require_field(cfg, "spans_m", where);
  if (!spans.is_array() || spans.empty())
    config_fail(where + ".spans_m", "expected a non-empty array of [z_i, z_f]");

  Table t;
  t.columns = {"z_initial_m", "z_final_m", "delta_closed_rad",
               "delta_numeric_rad", "rel_diff"};
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const std::string sw = where + ".spans_m[" + std::to_string(i) + "]";
    const json& span = spans[i];
    if (!span.is_array() || span.size() != 2)
      config_fail(sw, "expected [z_initial, z_final]");
    const double z_i = get_positive(span[0], sw + "[0]");
    double z_f;
    if (span[1].is_string()) {
      if (span[1].get<std::string>() != "inf")
        config_fail(sw + "[1]", "expected a number or \"inf\"");
      z_f = std::numeric_limits<double>::infinity();
    } else {
      z_f = get_positive(span[1], sw + "[1]");
    }
    const double closed = faraday_rotation_axial(src, z_i, z_f, k);
    const double numeric = faraday_rotation_numeric(src, z_i, z_f, omega, k);
    const double rel =
        closed == 0.0 ? 0.0 : std::abs(numeric - closed) / std::abs(closed);
    t.rows.push_back({format_double(z_i), format_double(z_f),
                      format_double(closed), format_double(numeric),
                      format_double(rel)});
  }
  return t;
}

Table run_scenario(const Scenario& s) {
  if (s.command == "dispersion") return run_dispersion(s.config, s.constants);
  if (s.command == "gyro-signal") return run_gyro_signal(s.config, s.constants);
  if (s.command == "residual") return run_residual(s.config, s.constants);
  if (s.command == "doppler") return run_doppler(s.config, s.constants);
  if (s.command == "sagnac") return run_sagnac(s.config, s.constants);
  if (s.command == "gem-field") return run_gem_field(s.config, s.constants);
  if (s.command == "faraday") return run_faraday(s.config, s.constants);
  throw ConfigError("unknown command: " + s.command);
}

void write_output(const Scenario& s, const Table& t) {
  std::string rendered;
  if (s.format == "csv")
    rendered = t.to_csv();
  else if (s.format == "json")
    rendered = t.to_json();
  else
    throw ConfigError("unknown output format: " + s.format);

  if (s.out_path.empty()) {
    std::cout << rendered;
    return;
  }
  std::ofstream out(s.out_path);
  if (!out) throw ConfigError("cannot open output file: " + s.out_path);
  out << rendered;
}

}  // namespace spinlight
