#pragma once

#include <string>
#include <vector>

#include "qedem/config.hpp"

namespace qedem {

// A scenario bundles one computation pipeline behind the CLI: it reads its
// parameters from a ConfigFile, runs, and writes CSV artifacts plus a
// summary.txt into an output directory. All numeric output goes through
// format_sci so repeated runs produce byte-identical files.
enum class ScenarioKind {
  Spinor,      // single-particle spinor and its bilinears
  Amplitude,   // two-particle exchange amplitude
  FieldGrid,   // potentials, fields, currents and field-equation residuals on a grid
  GaussFlux,   // electric flux through a sphere vs enclosed charge
  AbPattern,   // double-slit interference around a solenoid
  BoostModes,  // mode list under a longitudinal boost
};

// Maps a CLI name like "field-grid" to its kind. Throws ConfigError on an
// unknown name; the message lists the valid choices.
ScenarioKind parse_scenario_kind(const std::string& name);

std::string scenario_kind_name(ScenarioKind kind);

// Parses and cross-checks the config without running anything. Returns
// human-readable diagnostics describing what a run would do. Throws
// ConfigError (or DomainError from downstream validation) on bad input.
std::vector<std::string> validate_scenario(ScenarioKind kind, const ConfigFile& cfg);

// Runs the scenario and writes its artifacts into out_dir (which must already
// exist). Throws ConfigError, DomainError, or PrecisionError on failure.
void run_scenario(ScenarioKind kind, const ConfigFile& cfg, const std::string& out_dir);

}  // namespace qedem
