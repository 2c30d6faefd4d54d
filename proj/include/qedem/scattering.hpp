#pragma once

#include <complex>

#include "qedem/constants.hpp"
#include "qedem/kinematics.hpp"

namespace qedem {

// Elastic two-electron scattering kinematics: incoming (p, k), outgoing
// (p_out, k_out), all on shell for the same mass. The exchange diagram is
// deliberately not included; only the direct photon-exchange channel enters.
struct ScatteringConfig {
  FourVector p_in{};
  FourVector p_out{};
  FourVector k_in{};
  FourVector k_out{};
  double coupling = kDefaultCoupling;
  double mass = kDefaultMass;
  // Componentwise bound on |p_in + k_in - p_out - k_out|.
  double conservation_tol = 1e-9;
};

// Center-of-momentum elastic config: k_in = -p, k_out = -p_out.
// Requires |p| == |p_out| (within 1e-12 relative) so energies balance.
ScatteringConfig com_elastic_config(const Vec3& p, const Vec3& p_out, double mass,
                                    double coupling);

// Throws DomainError when a leg is off shell (1e-10 relative), momentum
// conservation fails the configured tolerance, or the kinematics is exactly
// forward (p_out == p_in), which puts the exchanged photon on its pole.
void validate(const ScatteringConfig& cfg);

struct Amplitude {
  std::complex<double> value{};
  // (omega_p - omega_p')^2 - |p - p'|^2; negative for non-forward elastic
  // kinematics (spacelike exchange).
  double photon_virtuality = 0.0;
};

// Direct-channel second order amplitude, with the (2 pi)^4 delta stripped:
//   i e^2 / [(w_p - w_p')^2 - |p - p'|^2]
//     * (ubar_p' g^0 u_p ubar_k' g^0 u_k - ubar_p' g^i u_p ubar_k' g^i u_k).
Amplitude scattering_amplitude(const ScatteringConfig& cfg);

// Static Coulomb limit of the same channel: -i 4 m^2 e^2 / |p - p'|^2.
Amplitude nonrelativistic_amplitude(const ScatteringConfig& cfg);

}  // namespace qedem
