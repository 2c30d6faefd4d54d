#include "qedem/scattering.hpp"

#include <cmath>

#include "qedem/dirac.hpp"

namespace qedem {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_on_shell(const FourVector& u, double mass, const char* leg) {
  const double m2 = mass * mass;
  const double dev = std::abs(minkowski_norm(u) - m2);
  if (dev > 1e-10 * std::max(1.0, m2)) {
    throw DomainError(std::string("scattering: leg ") + leg + " is off shell");
  }
  if (!(u.t > 0.0)) {
    throw DomainError(std::string("scattering: leg ") + leg + " has non-positive energy");
  }
}

}  // namespace

ScatteringConfig com_elastic_config(const Vec3& p, const Vec3& p_out, double mass,
                                    double coupling) {
  const double np = norm(p);
  const double nq = norm(p_out);
  if (std::abs(np - nq) > 1e-12 * std::max(1.0, np)) {
    throw DomainError("com_elastic_config: |p| and |p_out| must match");
  }
  ScatteringConfig cfg;
  cfg.p_in = on_shell(mass, p);
  cfg.p_out = on_shell(mass, p_out);
  cfg.k_in = on_shell(mass, -p);
  cfg.k_out = on_shell(mass, -p_out);
  cfg.mass = mass;
  cfg.coupling = coupling;
  return cfg;
}

void validate(const ScatteringConfig& cfg) {
  if (!(cfg.mass > 0.0)) throw DomainError("scattering: mass must be positive");
  if (!(cfg.coupling > 0.0)) throw DomainError("scattering: coupling must be positive");
  require_on_shell(cfg.p_in, cfg.mass, "p_in");
  require_on_shell(cfg.p_out, cfg.mass, "p_out");
  require_on_shell(cfg.k_in, cfg.mass, "k_in");
  require_on_shell(cfg.k_out, cfg.mass, "k_out");

  const FourVector miss = cfg.p_in + cfg.k_in - cfg.p_out - cfg.k_out;
  const double worst = std::max(std::abs(miss.t),
                                std::max(std::abs(miss.x.x),
                                         std::max(std::abs(miss.x.y), std::abs(miss.x.z))));
  if (worst > cfg.conservation_tol) {
    throw DomainError("scattering: four-momentum not conserved within tolerance");
  }

  const Vec3 q = cfg.p_in.x - cfg.p_out.x;
  const double scale = std::max(1.0, norm(cfg.p_in.x) + norm(cfg.p_out.x));
  if (norm(q) <= 1e-12 * scale) {
    throw DomainError("scattering: forward kinematics, photon propagator is singular");
  }
}

Amplitude scattering_amplitude(const ScatteringConfig& cfg) {
  validate(cfg);

  const DiracSpinor u_p = build_spinor(cfg.p_in.x, cfg.mass);
  const DiracSpinor u_p_out = build_spinor(cfg.p_out.x, cfg.mass);
  const DiracSpinor u_k = build_spinor(cfg.k_in.x, cfg.mass);
  const DiracSpinor u_k_out = build_spinor(cfg.k_out.x, cfg.mass);

  const auto a = bilinear_four_vector(u_p_out, u_p);
  const auto b = bilinear_four_vector(u_k_out, u_k);
  const std::complex<double> contraction = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];

  const double dw = cfg.p_in.t - cfg.p_out.t;
  const Vec3 q = cfg.p_in.x - cfg.p_out.x;
  const double virtuality = dw * dw - norm_squared(q);

  Amplitude amp;
  amp.photon_virtuality = virtuality;
  amp.value = kI * (cfg.coupling * cfg.coupling / virtuality) * contraction;
  return amp;
}

Amplitude nonrelativistic_amplitude(const ScatteringConfig& cfg) {
  validate(cfg);
  const Vec3 q = cfg.p_in.x - cfg.p_out.x;
  const double q2 = norm_squared(q);
  Amplitude amp;
  const double dw = cfg.p_in.t - cfg.p_out.t;
  amp.photon_virtuality = dw * dw - q2;
  amp.value = -kI * 4.0 * cfg.mass * cfg.mass * cfg.coupling * cfg.coupling / q2;
  return amp;
}

}  // namespace qedem
