#pragma once

namespace qedem {

// Electromagnetic coupling sqrt(4*pi/137.036) in Heaviside-Lorentz natural
// units (hbar = c = 1). Every routine that consumes a coupling accepts an
// explicit value; this is only the shared default.
inline constexpr double kDefaultCoupling = 0.302822;

// Default fermion mass in natural units.
inline constexpr double kDefaultMass = 1.0;

}  // namespace qedem
