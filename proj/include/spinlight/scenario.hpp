// spinlight - scenario configs, physics pipeline runners, table output

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spinlight/constants.hpp"

namespace spinlight {

// Deterministic table of results: fixed column order, floats rendered with
// 17 significant digits so identical inputs produce byte-identical output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_json() const;
};

std::string format_double(double v);

// A parsed run request: one command kind plus its JSON parameters.
struct Scenario {
  std::string command;  // dispersion | residual | doppler | sagnac |
                        // gem-field | faraday | gyro-signal
  nlohmann::json config;
  std::string format = "csv";  // csv | json
  std::string out_path;        // empty -> stdout
  Constants constants{};
};

// Applies {"c_m_per_s", "mu0_H_per_m", "eps0_F_per_m", "G_N_m3_per_kg_s2",
// "hbar_J_s"} overrides onto `base`. Unknown keys are a ConfigError.
Constants apply_constants_overrides(const Constants& base,
                                    const nlohmann::json& overrides);

// Builds a scenario from a command name and a config file. Consults the
// SPINLIGHT_CONSTANTS environment variable (a JSON file of overrides) and
// then the config's own "constants" object, which wins field by field.
Scenario load_scenario(const std::string& command, const std::string& config_path);

// Dispatches on scenario.command. Throws ConfigError for malformed configs
// and propagates module errors otherwise.
Table run_scenario(const Scenario& s);

Table run_dispersion(const nlohmann::json& cfg, const Constants& k);
Table run_gyro_signal(const nlohmann::json& cfg, const Constants& k);
Table run_residual(const nlohmann::json& cfg, const Constants& k);
Table run_doppler(const nlohmann::json& cfg, const Constants& k);
Table run_sagnac(const nlohmann::json& cfg, const Constants& k);
Table run_gem_field(const nlohmann::json& cfg, const Constants& k);
Table run_faraday(const nlohmann::json& cfg, const Constants& k);

// Renders in the scenario's format and writes to its output (file or stdout).
void write_output(const Scenario& s, const Table& t);

}  // namespace spinlight
