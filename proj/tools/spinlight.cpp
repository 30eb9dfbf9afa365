// spinlight - command-line front end

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinlight/errors.hpp"
#include "spinlight/scenario.hpp"

namespace {

constexpr const char* kCommands[] = {"dispersion", "residual", "doppler",
                                     "sagnac",     "gem-field", "faraday",
                                     "gyro-signal"};

int run(const std::string& command, const std::string& config_path,
        const std::string& out_path, const std::string& format) {
  spinlight::Scenario s = spinlight::load_scenario(command, config_path);
  s.out_path = out_path;
  s.format = format;
  const spinlight::Table t = spinlight::run_scenario(s);
  spinlight::write_output(s, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinlight: helicity-dependent wave propagation in rotating "
               "frames and gravitomagnetic fields"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "csv";
  for (const char* name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "scenario config file (JSON)")
        ->required();
    sub->add_option("--out", out_path, "output path (default: stdout)");
    sub->add_option("--format", format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, config_path, out_path, format);
  } catch (const spinlight::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const spinlight::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const spinlight::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
