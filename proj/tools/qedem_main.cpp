// Command line front end: picks a scenario, feeds it a config file, and
// writes the artifacts into an output directory.
//
// Exit codes:
//   0  success
//   1  configuration or domain error (bad config, invalid physics input)
//   2  precision error (a numerical contract could not be met)

#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qedem/config.hpp"
#include "qedem/errors.hpp"
#include "qedem/scenarios.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qedem: emergent electromagnetic fields from two-particle exchange"};

  std::string scenario_name;
  std::string config_path;
  std::string out_dir = ".";
  bool validate_only = false;

  app.add_option("scenario", scenario_name,
                 "One of: spinor, amplitude, field-grid, gauss-flux, ab-pattern, boost-modes")
      ->required();
  app.add_option("-c,--config", config_path, "Path to the scenario config file")->required();
  app.add_option("-o,--out", out_dir, "Directory for CSV artifacts and summary.txt");
  app.add_flag("--validate", validate_only,
               "Parse and cross-check the config, print diagnostics, do not run");

  CLI11_PARSE(app, argc, argv);

  try {
    const qedem::ScenarioKind kind = qedem::parse_scenario_kind(scenario_name);
    const qedem::ConfigFile cfg = qedem::ConfigFile::parse_file(config_path);
    if (validate_only) {
      for (const auto& line : qedem::validate_scenario(kind, cfg)) {
        std::cout << line << "\n";
      }
      std::cout << "config ok\n";
      return 0;
    }
    std::filesystem::create_directories(out_dir);
    qedem::run_scenario(kind, cfg, out_dir);
    std::cout << "wrote artifacts to " << out_dir << "\n";
    return 0;
  } catch (const qedem::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    std::cerr << "achieved error: " << e.achieved_error() << "\n";
    return 2;
  } catch (const qedem::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const qedem::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
