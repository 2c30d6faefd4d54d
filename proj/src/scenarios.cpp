#include "qedem/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <memory>
#include <vector>

#include "qedem/aharonov_bohm.hpp"
#include "qedem/constants.hpp"
#include "qedem/csv.hpp"
#include "qedem/dirac.hpp"
#include "qedem/errors.hpp"
#include "qedem/fields.hpp"
#include "qedem/grid.hpp"
#include "qedem/kinematics.hpp"
#include "qedem/modes.hpp"
#include "qedem/parallel.hpp"
#include "qedem/scattering.hpp"

namespace qedem {

namespace {

// ---------------------------------------------------------------------------
// Config access helpers

[[noreturn]] void missing(const std::string& section, const std::string& key) {
  throw ConfigError("[" + section + "] " + key + ": missing required key");
}

Vec3 require_vec3(const ConfigFile& cfg, const std::string& section, const std::string& key) {
  if (!cfg.has_key(section, key)) missing(section, key);
  return cfg.get_vec3(section, key, {});
}

double require_double(const ConfigFile& cfg, const std::string& section, const std::string& key) {
  if (!cfg.has_key(section, key)) missing(section, key);
  return cfg.get_double(section, key, 0.0);
}

std::array<int, 3> require_int3(const ConfigFile& cfg, const std::string& section,
                                const std::string& key) {
  if (!cfg.has_key(section, key)) missing(section, key);
  return cfg.get_int3(section, key, {});
}

double global_mass(const ConfigFile& cfg) {
  return cfg.get_double("run", "mass", kDefaultMass);
}

double global_coupling(const ConfigFile& cfg) {
  return cfg.get_double("run", "coupling", kDefaultCoupling);
}

// ---------------------------------------------------------------------------
// Summary and formatting helpers

std::string vec_str(const Vec3& v) {
  return format_sci(v.x) + "," + format_sci(v.y) + "," + format_sci(v.z);
}

void write_summary(const std::string& out_dir, const std::vector<std::string>& lines) {
  const std::string path = out_dir + "/summary.txt";
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  for (const auto& line : lines) f << line << "\n";
}

// ---------------------------------------------------------------------------
// Schemas

const std::vector<std::string> kRunKeys = {"scenario", "coupling", "mass"};
const std::vector<std::string> kSourceKeys = {"momentum", "center", "mass", "coupling"};

std::vector<SchemaSection> schema_for(ScenarioKind kind) {
  std::vector<SchemaSection> schema = {{"run", false, kRunKeys}};
  switch (kind) {
    case ScenarioKind::Spinor:
      schema.push_back({"spinor", false, {"momentum", "mass"}});
      break;
    case ScenarioKind::Amplitude:
      schema.push_back({"amplitude", false, {"p", "p_out", "k", "k_out", "conservation_tol"}});
      break;
    case ScenarioKind::FieldGrid:
      schema.push_back({"source.", true, kSourceKeys});
      schema.push_back(
          {"grid", false, {"origin", "spacing", "dims", "bump_width", "exclusion_radius"}});
      break;
    case ScenarioKind::GaussFlux:
      schema.push_back({"source.", true, kSourceKeys});
      schema.push_back(
          {"flux", false, {"center", "radius", "theta_steps", "phi_steps", "tolerance"}});
      break;
    case ScenarioKind::AbPattern:
      schema.push_back({"ab",
                        false,
                        {"model", "flux", "radius", "axis_point", "axis_dir", "source", "slit1",
                         "slit2", "screen_origin", "screen_axis", "wavevector", "screen_min",
                         "screen_max", "screen_samples", "steps_per_segment", "rings",
                         "sources_per_ring", "pitch", "ring_radius", "source_momentum"}});
      break;
    case ScenarioKind::BoostModes:
      schema.push_back({"boost", false, {"velocity"}});
      schema.push_back({"mode.", true, {"omega", "k", "amplitude"}});
      break;
  }
  return schema;
}

void check_scenario_name(ScenarioKind kind, const ConfigFile& cfg) {
  const std::string declared = cfg.get_string("run", "scenario", "");
  if (!declared.empty() && declared != scenario_kind_name(kind)) {
    throw ConfigError("[run] scenario: config declares '" + declared + "' but '" +
                      scenario_kind_name(kind) + "' was requested");
  }
}

SourceEnsemble ensemble_from_config(const ConfigFile& cfg) {
  SourceEnsemble ensemble;
  for (const auto* section : cfg.sections_with_prefix("source.")) {
    ChargeSource src;
    src.center = require_vec3(cfg, section->name, "center");
    src.momentum = cfg.get_vec3(section->name, "momentum", {});
    src.mass = cfg.get_double(section->name, "mass", global_mass(cfg));
    src.coupling = cfg.get_double(section->name, "coupling", global_coupling(cfg));
    ensemble.sources.push_back(src);
  }
  validate(ensemble);
  return ensemble;
}

// ---------------------------------------------------------------------------
// Spinor scenario

struct SpinorSetup {
  Vec3 momentum{};
  double mass = 0.0;
};

SpinorSetup load_spinor(const ConfigFile& cfg) {
  SpinorSetup s;
  s.momentum = require_vec3(cfg, "spinor", "momentum");
  s.mass = cfg.get_double("spinor", "mass", global_mass(cfg));
  if (s.mass <= 0) throw ConfigError("[spinor] mass: must be positive");
  return s;
}

void run_spinor(const ConfigFile& cfg, const std::string& out_dir) {
  const SpinorSetup s = load_spinor(cfg);
  const DiracSpinor u = build_spinor(s.momentum, s.mass);
  const auto bil = bilinear_four_vector(u, u);
  const FourVector kmu = on_shell(s.mass, s.momentum);
  const std::array<double, 4> two_k = {2 * kmu.t, 2 * kmu.x.x, 2 * kmu.x.y, 2 * kmu.x.z};

  double norm = 0.0;
  for (const auto& c : u.components) norm += std::norm(c);
  // ubar u = u^dag gamma^0 u; components swap halves in this basis.
  Complex scalar = 0.0;
  const SpinorComponents g0u = gamma(0) * u.components;
  for (int i = 0; i < 4; ++i) {
    scalar += std::conj(u.components[static_cast<std::size_t>(i)]) *
              g0u[static_cast<std::size_t>(i)];
  }

  double max_err = 0.0;
  std::vector<std::vector<double>> bil_rows;
  for (int mu = 0; mu < 4; ++mu) {
    const auto& b = bil[static_cast<std::size_t>(mu)];
    const double expected = two_k[static_cast<std::size_t>(mu)];
    max_err = std::max(max_err, std::abs(b - Complex(expected, 0)));
    bil_rows.push_back({static_cast<double>(mu), b.real(), b.imag(), expected});
  }
  const double tol = 1e-10 * std::max(1.0, 2 * u.energy);

  std::vector<std::vector<double>> comp_rows;
  for (int i = 0; i < 4; ++i) {
    const auto& c = u.components[static_cast<std::size_t>(i)];
    comp_rows.push_back({static_cast<double>(i), c.real(), c.imag()});
  }
  write_csv(out_dir + "/spinor.csv", "component,re,im", comp_rows);
  write_csv(out_dir + "/bilinears.csv", "mu,re,im,expected", bil_rows);

  write_summary(out_dir, {
                             "scenario = spinor",
                             "mass = " + format_sci(s.mass),
                             "momentum = " + vec_str(s.momentum),
                             "energy = " + format_sci(u.energy),
                             "norm_u_dag_u = " + format_sci(norm),
                             "expected_norm = " + format_sci(2 * u.energy),
                             "scalar_ubar_u = " + format_sci(scalar.real()),
                             "expected_scalar = " + format_sci(2 * s.mass),
                             "bilinear_max_error = " + format_sci(max_err),
                             "bilinear_tolerance = " + format_sci(tol),
                         });
  if (max_err > tol) {
    throw PrecisionError("spinor bilinears deviate from kinematics beyond tolerance", max_err);
  }
}

// ---------------------------------------------------------------------------
// Amplitude scenario

ScatteringConfig load_amplitude(const ConfigFile& cfg) {
  const double mass = global_mass(cfg);
  ScatteringConfig c;
  c.mass = mass;
  c.coupling = global_coupling(cfg);
  c.p_in = on_shell(mass, require_vec3(cfg, "amplitude", "p"));
  c.p_out = on_shell(mass, require_vec3(cfg, "amplitude", "p_out"));
  c.k_in = on_shell(mass, require_vec3(cfg, "amplitude", "k"));
  c.k_out = on_shell(mass, require_vec3(cfg, "amplitude", "k_out"));
  c.conservation_tol = cfg.get_double("amplitude", "conservation_tol", 1e-9);
  validate(c);
  return c;
}

void run_amplitude(const ConfigFile& cfg, const std::string& out_dir) {
  const ScatteringConfig c = load_amplitude(cfg);
  const Amplitude amp = scattering_amplitude(c);
  const Amplitude nr = nonrelativistic_amplitude(c);

  write_csv(out_dir + "/amplitude.csv", "re,im,virtuality,nonrel_re,nonrel_im",
            {{amp.value.real(), amp.value.imag(), amp.photon_virtuality, nr.value.real(),
              nr.value.imag()}});

  write_summary(out_dir, {
                             "scenario = amplitude",
                             "mass = " + format_sci(c.mass),
                             "coupling = " + format_sci(c.coupling),
                             "p = " + vec_str(c.p_in.x),
                             "p_out = " + vec_str(c.p_out.x),
                             "k = " + vec_str(c.k_in.x),
                             "k_out = " + vec_str(c.k_out.x),
                             "conservation_tol = " + format_sci(c.conservation_tol),
                             "amplitude_re = " + format_sci(amp.value.real()),
                             "amplitude_im = " + format_sci(amp.value.imag()),
                             "photon_virtuality = " + format_sci(amp.photon_virtuality),
                             "nonrel_re = " + format_sci(nr.value.real()),
                             "nonrel_im = " + format_sci(nr.value.imag()),
                             "abs_ratio_to_nonrel = " +
                                 format_sci(std::abs(amp.value) / std::abs(nr.value)),
                         });
}

// ---------------------------------------------------------------------------
// Field grid scenario

struct FieldGridSetup {
  SourceEnsemble ensemble;
  GridSpec spec;
  double bump_width = 0.0;
  double exclusion_radius = 0.0;
};

FieldGridSetup load_field_grid(const ConfigFile& cfg) {
  FieldGridSetup s;
  s.ensemble = ensemble_from_config(cfg);
  s.spec.origin = require_vec3(cfg, "grid", "origin");
  s.spec.spacing = require_double(cfg, "grid", "spacing");
  s.spec.dims = require_int3(cfg, "grid", "dims");
  validate(s.spec);
  s.bump_width = cfg.get_double("grid", "bump_width", 2.0 * s.spec.spacing);
  s.exclusion_radius = cfg.get_double("grid", "exclusion_radius", 0.0);
  // Fail early with a clear message if a node sits on a source center; the
  // closed forms are singular there.
  for (const auto& src : s.ensemble.sources) {
    const Vec3 rel = src.center - s.spec.origin;
    const double h = s.spec.spacing;
    const double ix = std::round(rel.x / h);
    const double iy = std::round(rel.y / h);
    const double iz = std::round(rel.z / h);
    const Vec3 nearest = {s.spec.origin.x + h * ix, s.spec.origin.y + h * iy,
                          s.spec.origin.z + h * iz};
    const bool inside = ix >= 0 && ix < s.spec.dims[0] && iy >= 0 && iy < s.spec.dims[1] &&
                        iz >= 0 && iz < s.spec.dims[2];
    if (inside && norm(nearest - src.center) < 1e-9 * h) {
      throw ConfigError("[grid] origin: a grid node coincides with a source center; "
                        "offset the grid by a fraction of the spacing");
    }
  }
  return s;
}

void run_field_grid(const ConfigFile& cfg, const std::string& out_dir) {
  const FieldGridSetup s = load_field_grid(cfg);

  GridField potential = make_grid_field(s.spec, {"phi", "ax", "ay", "az"});
  GridField fields = make_grid_field(s.spec, {"ex", "ey", "ez", "bx", "by", "bz"});
  const auto dims = s.spec.dims;
  parallel_for(s.spec.node_count(), [&](std::size_t n) {
    const int i = static_cast<int>(n % static_cast<std::size_t>(dims[0]));
    const int j = static_cast<int>((n / static_cast<std::size_t>(dims[0])) %
                                   static_cast<std::size_t>(dims[1]));
    const int k = static_cast<int>(n / (static_cast<std::size_t>(dims[0]) *
                                        static_cast<std::size_t>(dims[1])));
    const Vec3 x = s.spec.node(i, j, k);
    const FourPotentialSample a = potential_closed_form(s.ensemble, x);
    potential.at(n, 0) = a.phi;
    potential.at(n, 1) = a.vector_potential.x;
    potential.at(n, 2) = a.vector_potential.y;
    potential.at(n, 3) = a.vector_potential.z;
    const EBSample eb = electromagnetic_fields(s.ensemble, x);
    fields.at(n, 0) = eb.e.x;
    fields.at(n, 1) = eb.e.y;
    fields.at(n, 2) = eb.e.z;
    fields.at(n, 3) = eb.b.x;
    fields.at(n, 4) = eb.b.y;
    fields.at(n, 5) = eb.b.z;
  });

  const GridField current = current_density(s.ensemble, s.spec, s.bump_width);
  const MaxwellResidualResult res =
      maxwell_residual(s.ensemble, s.spec, s.bump_width, s.exclusion_radius);

  GridField residual = make_grid_field(s.spec, {"r0", "rx", "ry", "rz", "valid"});
  for (std::size_t n = 0; n < s.spec.node_count(); ++n) {
    for (int c = 0; c < 4; ++c) residual.at(n, c) = res.residual.at(n, c);
    residual.at(n, 4) = res.valid[n] ? 1.0 : 0.0;
  }

  write_grid_csv(out_dir + "/potential.csv", potential);
  write_grid_csv(out_dir + "/fields.csv", fields);
  write_grid_csv(out_dir + "/current.csv", current);
  write_grid_csv(out_dir + "/residual.csv", residual);

  write_summary(out_dir,
                {
                    "scenario = field-grid",
                    "sources = " + std::to_string(s.ensemble.sources.size()),
                    "dims = " + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
                        std::to_string(dims[2]),
                    "spacing = " + format_sci(s.spec.spacing),
                    "origin = " + vec_str(s.spec.origin),
                    "bump_width = " + format_sci(s.bump_width),
                    "exclusion_radius = " + format_sci(res.exclusion_radius),
                    "residual_max_r0 = " + format_sci(res.max_abs[0]),
                    "residual_max_rx = " + format_sci(res.max_abs[1]),
                    "residual_max_ry = " + format_sci(res.max_abs[2]),
                    "residual_max_rz = " + format_sci(res.max_abs[3]),
                    std::string("coarse_grid_warning = ") +
                        (res.coarse_grid_warning ? "1" : "0"),
                });
}

// ---------------------------------------------------------------------------
// Gauss flux scenario

struct GaussFluxSetup {
  SourceEnsemble ensemble;
  Vec3 center{};
  double radius = 0.0;
  int theta_steps = 64;
  int phi_steps = 128;
  double tolerance = 1e-3;
  std::vector<bool> enclosed;
  double expected = 0.0;
};

GaussFluxSetup load_gauss_flux(const ConfigFile& cfg) {
  GaussFluxSetup s;
  s.ensemble = ensemble_from_config(cfg);
  s.center = cfg.get_vec3("flux", "center", {});
  s.radius = require_double(cfg, "flux", "radius");
  if (s.radius <= 0) throw ConfigError("[flux] radius: must be positive");
  s.theta_steps = cfg.get_int("flux", "theta_steps", 64);
  s.phi_steps = cfg.get_int("flux", "phi_steps", 128);
  if (s.theta_steps < 1 || s.phi_steps < 1) {
    throw ConfigError("[flux] theta_steps/phi_steps: must be positive");
  }
  s.tolerance = cfg.get_double("flux", "tolerance", 1e-3);
  if (s.tolerance <= 0) throw ConfigError("[flux] tolerance: must be positive");
  for (const auto& src : s.ensemble.sources) {
    const double dist = norm(src.center - s.center);
    if (std::abs(dist - s.radius) < 1e-9) {
      throw ConfigError("[flux] radius: a source sits on the flux sphere");
    }
    const bool in = dist < s.radius;
    s.enclosed.push_back(in);
    if (in) s.expected += -src.coupling;
  }
  return s;
}

void run_gauss_flux(const ConfigFile& cfg, const std::string& out_dir) {
  const GaussFluxSetup s = load_gauss_flux(cfg);
  const double flux = sphere_flux(s.ensemble, s.center, s.radius, s.theta_steps, s.phi_steps);
  const double abs_error = std::abs(flux - s.expected);

  write_csv(out_dir + "/flux.csv", "flux,expected,abs_error,tolerance",
            {{flux, s.expected, abs_error, s.tolerance}});

  std::vector<std::string> lines = {
      "scenario = gauss-flux",
      "center = " + vec_str(s.center),
      "radius = " + format_sci(s.radius),
      "theta_steps = " + std::to_string(s.theta_steps),
      "phi_steps = " + std::to_string(s.phi_steps),
  };
  for (std::size_t j = 0; j < s.enclosed.size(); ++j) {
    lines.push_back("source_" + std::to_string(j) + "_enclosed = " +
                    (s.enclosed[j] ? "1" : "0"));
  }
  lines.push_back("flux = " + format_sci(flux));
  lines.push_back("expected = " + format_sci(s.expected));
  lines.push_back("abs_error = " + format_sci(abs_error));
  lines.push_back("tolerance = " + format_sci(s.tolerance));
  lines.push_back(std::string("status = ") + (abs_error <= s.tolerance ? "pass" : "fail"));
  write_summary(out_dir, lines);

  if (abs_error > s.tolerance) {
    throw PrecisionError("flux quadrature misses the enclosed charge by " +
                             format_sci(abs_error) + " (tolerance " + format_sci(s.tolerance) +
                             "); raise theta_steps/phi_steps or loosen the tolerance",
                         abs_error);
  }
}

// ---------------------------------------------------------------------------
// Interference scenario

struct AbPatternSetup {
  DoubleSlitGeometry geometry;
  std::string model_name;
  // Unset for free propagation.
  std::unique_ptr<SolenoidModel> model;
  double coupling = kDefaultCoupling;
  int steps_per_segment = 64;
  double flux = 0.0;
};

AbPatternSetup load_ab_pattern(const ConfigFile& cfg) {
  AbPatternSetup s;
  s.coupling = global_coupling(cfg);
  s.model_name = cfg.get_string("ab", "model", "ideal");
  s.steps_per_segment = cfg.get_int("ab", "steps_per_segment", 64);
  if (s.steps_per_segment < 1) throw ConfigError("[ab] steps_per_segment: must be positive");

  DoubleSlitGeometry& g = s.geometry;
  g.source = require_vec3(cfg, "ab", "source");
  g.slit1 = require_vec3(cfg, "ab", "slit1");
  g.slit2 = require_vec3(cfg, "ab", "slit2");
  g.screen_origin = require_vec3(cfg, "ab", "screen_origin");
  g.screen_axis = require_vec3(cfg, "ab", "screen_axis");
  g.wavevector = require_vec3(cfg, "ab", "wavevector");
  const double lo = cfg.get_double("ab", "screen_min", -2.0);
  const double hi = cfg.get_double("ab", "screen_max", 2.0);
  const int samples = cfg.get_int("ab", "screen_samples", 401);
  if (samples < 2) throw ConfigError("[ab] screen_samples: need at least 2");
  if (!(hi > lo)) throw ConfigError("[ab] screen_max: must exceed screen_min");
  g.screen_offsets.resize(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    g.screen_offsets[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (samples - 1);
  }
  validate(g);

  if (s.model_name == "ideal") {
    IdealSolenoid sol;
    sol.axis_point = cfg.get_vec3("ab", "axis_point", {0, 0, 0});
    sol.axis_dir = cfg.get_vec3("ab", "axis_dir", {0, 0, 1});
    sol.flux = require_double(cfg, "ab", "flux");
    sol.radius = cfg.get_double("ab", "radius", 0.2);
    if (sol.radius <= 0) throw ConfigError("[ab] radius: must be positive");
    s.flux = sol.flux;
    s.model = std::make_unique<SolenoidModel>(sol);
  } else if (s.model_name == "array") {
    const int rings = cfg.get_int("ab", "rings", 16);
    const int per_ring = cfg.get_int("ab", "sources_per_ring", 32);
    const double pitch = cfg.get_double("ab", "pitch", 0.25);
    const double ring_radius = cfg.get_double("ab", "ring_radius", 1.0);
    const double k_mag = cfg.get_double("ab", "source_momentum", 0.5);
    if (rings < 1 || per_ring < 3) {
      throw ConfigError("[ab] rings/sources_per_ring: need >= 1 ring of >= 3 sources");
    }
    s.model = std::make_unique<SolenoidModel>(
        make_ring_array(rings, per_ring, ring_radius, pitch, k_mag, global_mass(cfg),
                        s.coupling));
  } else if (s.model_name != "none") {
    throw ConfigError("[ab] model: expected 'ideal', 'array', or 'none'");
  }
  return s;
}

void run_ab_pattern(const ConfigFile& cfg, const std::string& out_dir) {
  const AbPatternSetup s = load_ab_pattern(cfg);
  const auto pattern = interference_pattern(s.geometry, s.model.get(), s.coupling,
                                            s.steps_per_segment);

  std::vector<std::vector<double>> rows;
  rows.reserve(pattern.size());
  for (const auto& p : pattern) rows.push_back({p.offset, p.intensity, p.phase1, p.phase2});
  write_csv(out_dir + "/pattern.csv", "offset,intensity,phase1,phase2", rows);

  const double center = central_peak_offset(pattern);
  const double spacing = fringe_spacing(pattern);

  std::vector<std::string> lines = {
      "scenario = ab-pattern",
      "model = " + s.model_name,
      "coupling = " + format_sci(s.coupling),
      "wavevector = " + vec_str(s.geometry.wavevector),
      "screen_samples = " + std::to_string(s.geometry.screen_offsets.size()),
      "central_peak_offset = " + format_sci(center),
      "fringe_spacing = " + format_sci(spacing),
  };
  if (s.model_name == "ideal") {
    lines.push_back("flux = " + format_sci(s.flux));
    lines.push_back("phase_shift = " + format_sci(wrap_phase(-s.coupling * s.flux)));
  }
  write_summary(out_dir, lines);
}

// ---------------------------------------------------------------------------
// Boost scenario

struct BoostModesSetup {
  double velocity = 0.0;
  std::vector<ModeComponent> modes;
};

BoostModesSetup load_boost_modes(const ConfigFile& cfg) {
  BoostModesSetup s;
  s.velocity = require_double(cfg, "boost", "velocity");
  if (!(std::abs(s.velocity) < 1.0)) {
    throw ConfigError("[boost] velocity: must satisfy |v| < 1");
  }
  for (const auto* section : cfg.sections_with_prefix("mode.")) {
    ModeComponent m;
    m.omega = cfg.get_double(section->name, "omega", 0.0);
    m.k = require_vec3(cfg, section->name, "k");
    m.amplitude = cfg.get_complex(section->name, "amplitude", {1.0, 0.0});
    s.modes.push_back(m);
  }
  if (s.modes.empty()) throw ConfigError("need at least one [mode.N] section");
  return s;
}

void run_boost_modes(const ConfigFile& cfg, const std::string& out_dir) {
  const BoostModesSetup s = load_boost_modes(cfg);
  const BoostParameters boost(s.velocity);
  const auto boosted = boost_mode_set(s.modes, boost);

  write_modes_csv(out_dir + "/modes_input.csv", s.modes);
  write_modes_csv(out_dir + "/modes_boosted.csv", boosted);

  // The boosted set must reproduce the original field at mapped events.
  const std::vector<FourVector> events = {
      {0.0, {0.3, -0.2, 0.5}},  {0.0, {-1.1, 0.4, -0.8}}, {0.0, {0.0, 0.0, 1.5}},
      {0.0, {2.1, -0.9, 0.3}},  {0.7, {0.3, -0.2, 0.5}},  {0.7, {-1.1, 0.4, -0.8}},
      {0.7, {0.0, 0.0, 1.5}},   {0.7, {2.1, -0.9, 0.3}},
  };
  std::vector<std::vector<double>> inv_rows;
  double max_diff = 0.0;
  for (const auto& ev : events) {
    const double value_in = sample_field(s.modes, ev.x, ev.t);
    const FourVector mapped = boost_z(boost, ev);
    const double value_out = sample_field(boosted, mapped.x, mapped.t);
    const double diff = std::abs(value_out - value_in);
    max_diff = std::max(max_diff, diff);
    inv_rows.push_back({ev.t, ev.x.x, ev.x.y, ev.x.z, value_in, value_out, diff});
  }
  write_csv(out_dir + "/invariance.csv", "t,x,y,z,value_in,value_boosted,abs_diff", inv_rows);

  std::vector<std::vector<double>> vp_rows;
  double max_vp = 0.0;
  for (const auto& m : boosted) {
    if (norm(m.k) <= 1e-12) continue;
    const double vp = phase_velocity(m);
    max_vp = std::max(max_vp, std::abs(vp));
    vp_rows.push_back({m.omega, m.k.x, m.k.y, m.k.z, vp});
  }
  write_csv(out_dir + "/phase_velocity.csv", "omega,kx,ky,kz,vphase", vp_rows);

  const bool input_static = !check_time_varying(s.modes);
  const double inv_tol = 1e-9;

  std::vector<std::string> lines = {
      "scenario = boost-modes",
      "velocity = " + format_sci(s.velocity),
      "gamma = " + format_sci(boost.gamma()),
      "modes = " + std::to_string(s.modes.size()),
      "invariance_max_diff = " + format_sci(max_diff),
      "invariance_tolerance = " + format_sci(inv_tol),
      std::string("input_static = ") + (input_static ? "1" : "0"),
      "max_phase_velocity = " + format_sci(max_vp),
  };
  if (input_static) {
    lines.push_back("phase_velocity_bound = " + format_sci(std::abs(s.velocity)));
  }
  write_summary(out_dir, lines);

  if (max_diff > inv_tol) {
    throw PrecisionError("boosted field deviates from the original at mapped events", max_diff);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

ScenarioKind parse_scenario_kind(const std::string& name) {
  if (name == "spinor") return ScenarioKind::Spinor;
  if (name == "amplitude") return ScenarioKind::Amplitude;
  if (name == "field-grid") return ScenarioKind::FieldGrid;
  if (name == "gauss-flux") return ScenarioKind::GaussFlux;
  if (name == "ab-pattern") return ScenarioKind::AbPattern;
  if (name == "boost-modes") return ScenarioKind::BoostModes;
  throw ConfigError("unknown scenario '" + name +
                    "'; expected one of spinor, amplitude, field-grid, gauss-flux, "
                    "ab-pattern, boost-modes");
}

std::string scenario_kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Spinor: return "spinor";
    case ScenarioKind::Amplitude: return "amplitude";
    case ScenarioKind::FieldGrid: return "field-grid";
    case ScenarioKind::GaussFlux: return "gauss-flux";
    case ScenarioKind::AbPattern: return "ab-pattern";
    case ScenarioKind::BoostModes: return "boost-modes";
  }
  throw ConfigError("unknown scenario kind");
}

std::vector<std::string> validate_scenario(ScenarioKind kind, const ConfigFile& cfg) {
  enforce_schema(cfg, schema_for(kind));
  check_scenario_name(kind, cfg);
  std::vector<std::string> out = {"scenario: " + scenario_kind_name(kind)};
  switch (kind) {
    case ScenarioKind::Spinor: {
      const SpinorSetup s = load_spinor(cfg);
      out.push_back("momentum: " + vec_str(s.momentum));
      out.push_back("mass: " + format_sci(s.mass));
      break;
    }
    case ScenarioKind::Amplitude: {
      const ScatteringConfig c = load_amplitude(cfg);
      out.push_back("kinematics valid, conservation_tol " + format_sci(c.conservation_tol));
      break;
    }
    case ScenarioKind::FieldGrid: {
      const FieldGridSetup s = load_field_grid(cfg);
      out.push_back("sources: " + std::to_string(s.ensemble.sources.size()));
      out.push_back("grid: " + std::to_string(s.spec.dims[0]) + "x" +
                    std::to_string(s.spec.dims[1]) + "x" + std::to_string(s.spec.dims[2]) +
                    " spacing " + format_sci(s.spec.spacing));
      out.push_back("bump_width: " + format_sci(s.bump_width));
      break;
    }
    case ScenarioKind::GaussFlux: {
      const GaussFluxSetup s = load_gauss_flux(cfg);
      int inside = 0;
      for (const bool e : s.enclosed) inside += e ? 1 : 0;
      out.push_back("sources: " + std::to_string(s.ensemble.sources.size()) + " (" +
                    std::to_string(inside) + " enclosed)");
      out.push_back("expected flux: " + format_sci(s.expected));
      break;
    }
    case ScenarioKind::AbPattern: {
      const AbPatternSetup s = load_ab_pattern(cfg);
      out.push_back("model: " + s.model_name);
      out.push_back("screen samples: " + std::to_string(s.geometry.screen_offsets.size()));
      break;
    }
    case ScenarioKind::BoostModes: {
      const BoostModesSetup s = load_boost_modes(cfg);
      out.push_back("modes: " + std::to_string(s.modes.size()));
      out.push_back("velocity: " + format_sci(s.velocity));
      break;
    }
  }
  return out;
}

void run_scenario(ScenarioKind kind, const ConfigFile& cfg, const std::string& out_dir) {
  enforce_schema(cfg, schema_for(kind));
  check_scenario_name(kind, cfg);
  switch (kind) {
    case ScenarioKind::Spinor: run_spinor(cfg, out_dir); return;
    case ScenarioKind::Amplitude: run_amplitude(cfg, out_dir); return;
    case ScenarioKind::FieldGrid: run_field_grid(cfg, out_dir); return;
    case ScenarioKind::GaussFlux: run_gauss_flux(cfg, out_dir); return;
    case ScenarioKind::AbPattern: run_ab_pattern(cfg, out_dir); return;
    case ScenarioKind::BoostModes: run_boost_modes(cfg, out_dir); return;
  }
}

}  // namespace qedem
