#pragma once

#include <cstdint>
#include <vector>

#include "qedem/constants.hpp"
#include "qedem/grid.hpp"
#include "qedem/kinematics.hpp"
#include "qedem/vec3.hpp"

namespace qedem {

// A localized electron-like source: definite momentum, localized at `center`.
// Carries charge -coupling (coupling > 0).
struct ChargeSource {
  Vec3 momentum{};
  Vec3 center{};
  double mass = kDefaultMass;
  double coupling = kDefaultCoupling;

  double energy() const;
};

struct SourceEnsemble {
  std::vector<ChargeSource> sources;
};

// Throws DomainError on empty ensemble, non-positive mass/coupling, or two
// sources sharing a center (within 1e-12 absolute).
void validate(const SourceEnsemble& ensemble);

struct FourPotentialSample {
  Vec3 at{};
  double phi = 0.0;
  Vec3 vector_potential{};
};

// Static four-potential of the ensemble,
//   A^mu(x) = sum_j -e_j (ubar_j gamma^mu u_j) / (8 pi w_j |x - x_j|),
// with the forward bilinears evaluated through the Dirac layer. The time
// component reduces to -e_j / (4 pi r): it carries no energy dependence.
// Throws DomainError when x coincides with a source center.
FourPotentialSample potential_closed_form(const SourceEnsemble& ensemble, const Vec3& x);

// Independent momentum-space evaluation of the same potential for a single
// source: the 1/(4 pi r) kernel is reproduced by numerically integrating
//   K(r) = int d^3q/(2 pi)^3 exp(i q.r) / q^2
// over a sphere of radius `cutoff` (Gauss-Legendre panels in the radial and
// polar directions, one panel per oscillation period scaled by
// quadrature_resolution). Requires cutoff * |x - x_j| >= 20; below that the
// sharp-cutoff tail alone exceeds any useful accuracy and a PrecisionError
// carrying the tail estimate is thrown.
FourPotentialSample potential_fourier_oracle(const ChargeSource& source, const Vec3& x,
                                             double cutoff, int quadrature_resolution = 1);

// Spatial convection vector of one source: -e (ubar gamma^i u) / (2 w),
// i.e. -e k/w evaluated through the bilinears. The charge counterpart
// -e (ubar gamma^0 u) / (2 w) is exactly -e.
Vec3 convection_current_vector(const ChargeSource& source);

// Regularized four-current density at a point. Each source's delta function
// is replaced by a normalized Gaussian bump of width `bump_width`:
//   j^0 = -e g_w(|x - x_j|)
//   j   = transverse part of (-e k/w) g_w, the longitudinal Fourier
//         component removed in closed form, so div j = 0 identically.
double charge_density_at(const SourceEnsemble& ensemble, const Vec3& x, double bump_width);
Vec3 current_density_at(const SourceEnsemble& ensemble, const Vec3& x, double bump_width);

// Grid sampling of (j^0, j) with components "j0,jx,jy,jz".
// Throws ResolutionError when bump_width < 2 * spacing and DomainError when
// a node coincides with a source center.
GridField current_density(const SourceEnsemble& ensemble, const GridSpec& spec,
                          double bump_width);

struct EBSample {
  Vec3 at{};
  Vec3 e{};
  Vec3 b{};
};

// Static fields of the ensemble:
//   E(x) = sum_j -e_j (x - x_j) / (4 pi |x - x_j|^3)            (radially inward)
//   B(x) = sum_j -e_j (ubar_j gamma u_j) x (x - x_j) / (8 pi w_j |x - x_j|^3)
// Throws DomainError when x coincides with a source center.
EBSample electromagnetic_fields(const SourceEnsemble& ensemble, const Vec3& x);

struct MaxwellResidualResult {
  // Components "r0,rx,ry,rz": discrete lap(A^mu) - grad(div A)|spatial + j^mu.
  GridField residual;
  // 1 where the residual was evaluated (two-node margin from the boundary
  // and outside the exclusion balls), 0 elsewhere (residual stored as 0).
  std::vector<std::uint8_t> valid;
  // max |residual| per component over valid nodes.
  std::array<double, 4> max_abs{0, 0, 0, 0};
  // Set when spacing > 0.1 * (min distance from any source to a valid node).
  bool coarse_grid_warning = false;
  double exclusion_radius = 0.0;
};

// Discrete check of the static field equation lap(A^mu) - grad(div A) = -j^mu
// with second-order centered differences, A from potential_closed_form and
// j^mu from the Gaussian-regularized current. Nodes within exclusion_radius
// of a source center are masked out; the radius defaults to (and is clamped
// up to) 3 * spacing. Throws ResolutionError when bump_width < 2 * spacing.
MaxwellResidualResult maxwell_residual(const SourceEnsemble& ensemble, const GridSpec& spec,
                                       double bump_width, double exclusion_radius = 0.0);

// Midpoint flux quadrature of E . n over a sphere. For a sphere enclosing a
// subset S of the sources the exact value is -sum_{j in S} e_j.
double sphere_flux(const SourceEnsemble& ensemble, const Vec3& center, double radius,
                   int theta_steps, int phi_steps);

// Midpoint quadrature of B along a circle (center, axis `normal`, radius).
double circle_integral_b(const SourceEnsemble& ensemble, const Vec3& center, const Vec3& normal,
                         double radius, int steps);

// Midpoint polar quadrature of the regularized current through the disk
// spanned by the same circle.
double disk_current_flux(const SourceEnsemble& ensemble, const Vec3& center, const Vec3& normal,
                         double radius, double bump_width, int radial_steps, int angular_steps);

}  // namespace qedem
