#include "qedem/modes.hpp"

#include <cmath>
#include <fstream>

#include "qedem/csv.hpp"
#include "qedem/dirac.hpp"
#include "qedem/errors.hpp"

namespace qedem {

namespace {

constexpr double kStaticTol = 1e-12;

// i [a e^{-i phase_conj} - a* e^{+i phase_conj}] with phase_conj = w t - k.x
// equals 2 Im(a* e^{i (w t - k.x)}), kept in explicitly real form.
double mode_value(const ModeComponent& m, const Vec3& x, double t) {
  const double phase = m.omega * t - dot(m.k, x);
  const std::complex<double> rot =
      std::conj(m.amplitude) * std::exp(std::complex<double>(0.0, phase));
  return 2.0 * rot.imag();
}

}  // namespace

double sample_field(std::span<const ModeComponent> modes, const Vec3& x, double t) {
  double acc = 0.0;
  for (const auto& m : modes) acc += mode_value(m, x, t);
  return acc;
}

double sample_static_field(std::span<const ModeComponent> modes, const Vec3& x, double t) {
  for (const auto& m : modes) {
    if (std::abs(m.omega) > kStaticTol) {
      throw DomainError("sample_static_field: mode set contains a time-varying component");
    }
  }
  return sample_field(modes, x, t);
}

std::vector<ModeComponent> boost_mode_set(std::span<const ModeComponent> modes,
                                          const BoostParameters& boost) {
  std::vector<ModeComponent> out;
  out.reserve(modes.size());
  const double g = boost.gamma();
  const double v = boost.velocity();
  for (const auto& m : modes) {
    ModeComponent b = m;
    b.omega = g * (m.omega + v * m.k.z);
    b.k.z = g * (m.k.z + v * m.omega);
    out.push_back(b);
  }
  return out;
}

double phase_velocity(const ModeComponent& mode) {
  const double kn = norm(mode.k);
  if (!(kn > 0.0)) throw DomainError("phase_velocity: wavevector must be nonzero");
  return mode.omega / kn;
}

bool check_time_varying(std::span<const ModeComponent> modes) {
  for (const auto& m : modes) {
    if (std::abs(m.omega) > kStaticTol) return true;
  }
  return false;
}

ModeEBSample femf_mode_fields(const FreeFieldMode& mode, const Vec3& x, double t) {
  const double w = norm(mode.k);
  if (!(w > 0.0)) throw DomainError("femf_mode_fields: wavevector must be nonzero");
  if (mode.lambda != 1 && mode.lambda != 2) {
    throw DomainError("femf_mode_fields: polarization index must be 1 or 2");
  }
  const PolarizationPair pol = polarization_vectors(mode.k);
  const Vec3 v = (mode.lambda == 1) ? pol.v1 : pol.v2;

  const double phase = w * t - dot(mode.k, x);
  const std::complex<double> rot =
      std::conj(mode.amplitude) * std::exp(std::complex<double>(0.0, phase));
  const double osc = 2.0 * rot.imag();  // i [a e^{-i phase} - c.c.]

  ModeEBSample out;
  out.e = std::sqrt(0.5 * w) * osc * v;
  out.b = (1.0 / std::sqrt(2.0 * w)) * osc * cross(mode.k, v);
  return out;
}

void write_modes_csv(const std::string& path, std::span<const ModeComponent> modes) {
  std::vector<std::vector<double>> rows;
  rows.reserve(modes.size());
  for (const auto& m : modes) {
    rows.push_back({m.omega, m.k.x, m.k.y, m.k.z, m.amplitude.real(), m.amplitude.imag()});
  }
  write_csv(path, "omega,kx,ky,kz,re_amp,im_amp", rows);
}

std::vector<ModeComponent> read_modes_csv(const std::string& path) {
  const auto rows = read_csv(path);
  std::vector<ModeComponent> modes;
  modes.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != 6) throw ConfigError("mode CSV row must have 6 columns: " + path);
    ModeComponent m;
    m.omega = row[0];
    m.k = {row[1], row[2], row[3]};
    m.amplitude = {row[4], row[5]};
    modes.push_back(m);
  }
  return modes;
}

}  // namespace qedem
