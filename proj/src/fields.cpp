#include "qedem/fields.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qedem/dirac.hpp"
#include "qedem/parallel.hpp"

namespace qedem {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGlNode = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGlWeight = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// Real forward bilinear four-vector of one source, (ubar g^mu u) for mu=0..3.
std::array<double, 4> forward_bilinears(const ChargeSource& s) {
  const DiracSpinor u = build_spinor(s.momentum, s.mass);
  const auto b = bilinear_four_vector(u, u);
  return {b[0].real(), b[1].real(), b[2].real(), b[3].real()};
}

void require_away_from_centers(const SourceEnsemble& ensemble, const Vec3& x, const char* who) {
  for (const auto& s : ensemble.sources) {
    if (norm(x - s.center) <= 1e-12) {
      throw DomainError(std::string(who) + ": evaluation point coincides with a source center");
    }
  }
}

// Orthonormal pair completing `n` (assumed unit) to a right-handed frame.
void tangent_frame(const Vec3& n, Vec3& e1, Vec3& e2) {
  const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  e1 = normalized(cross(n, seed));
  e2 = cross(n, e1);
}

}  // namespace

double ChargeSource::energy() const {
  return std::sqrt(mass * mass + norm_squared(momentum));
}

void validate(const SourceEnsemble& ensemble) {
  if (ensemble.sources.empty()) {
    throw DomainError("SourceEnsemble: at least one source required");
  }
  for (const auto& s : ensemble.sources) {
    if (!(s.mass > 0.0)) throw DomainError("SourceEnsemble: source mass must be positive");
    if (!(s.coupling > 0.0)) throw DomainError("SourceEnsemble: source coupling must be positive");
  }
  for (std::size_t i = 0; i < ensemble.sources.size(); ++i) {
    for (std::size_t j = i + 1; j < ensemble.sources.size(); ++j) {
      if (norm(ensemble.sources[i].center - ensemble.sources[j].center) <= 1e-12) {
        throw DomainError("SourceEnsemble: two sources share a center");
      }
    }
  }
}

FourPotentialSample potential_closed_form(const SourceEnsemble& ensemble, const Vec3& x) {
  validate(ensemble);
  require_away_from_centers(ensemble, x, "potential_closed_form");
  FourPotentialSample out;
  out.at = x;
  for (const auto& s : ensemble.sources) {
    const double r = norm(x - s.center);
    const auto bil = forward_bilinears(s);
    const double denom = 8.0 * kPi * s.energy() * r;
    out.phi += -s.coupling * bil[0] / denom;
    out.vector_potential += (-s.coupling / denom) * Vec3{bil[1], bil[2], bil[3]};
  }
  return out;
}

namespace {

// int_0^1 cos(q r mu) dmu by composite Gauss-Legendre, one panel per half
// period of the integrand (scaled by `resolution`).
double angular_kernel(double qr, int resolution) {
  const int panels = std::max(1, static_cast<int>(std::ceil(qr / kPi)) * resolution);
  const double width = 1.0 / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (int g = 0; g < 8; ++g) {
      const double mu = mid + 0.5 * width * kGlNode[static_cast<std::size_t>(g)];
      acc += 0.5 * width * kGlWeight[static_cast<std::size_t>(g)] * std::cos(qr * mu);
    }
  }
  return acc;
}

}  // namespace

FourPotentialSample potential_fourier_oracle(const ChargeSource& source, const Vec3& x,
                                             double cutoff, int quadrature_resolution) {
  if (!(cutoff > 0.0)) throw DomainError("potential_fourier_oracle: cutoff must be positive");
  if (quadrature_resolution < 1) {
    throw DomainError("potential_fourier_oracle: quadrature_resolution must be >= 1");
  }
  const double r = norm(x - source.center);
  if (r <= 1e-12) {
    throw DomainError("potential_fourier_oracle: evaluation point coincides with the center");
  }
  const double phase_budget = cutoff * r;
  if (phase_budget < 20.0) {
    // With a sharp radial cutoff the neglected tail behaves like
    // cos(cutoff r)/(cutoff r) relative to pi/2; below 20 that estimate is
    // the dominant error and no quadrature effort can recover accuracy.
    throw PrecisionError("potential_fourier_oracle: cutoff * distance below 20",
                         (2.0 / kPi) / phase_budget);
  }

  // K(r) = 1/(2 pi^2) int_0^cutoff [int_0^1 cos(q r mu) dmu] dq; the odd
  // (sine) part of the plane wave integrates to zero over the sphere.
  const int radial_panels =
      std::max(4, static_cast<int>(std::ceil(phase_budget / kPi)) * quadrature_resolution);
  const double width = cutoff / radial_panels;
  double kernel = 0.0;
  for (int p = 0; p < radial_panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (int g = 0; g < 8; ++g) {
      const double q = mid + 0.5 * width * kGlNode[static_cast<std::size_t>(g)];
      kernel += 0.5 * width * kGlWeight[static_cast<std::size_t>(g)] *
                angular_kernel(q * r, quadrature_resolution);
    }
  }
  kernel /= 2.0 * kPi * kPi;

  const auto bil = forward_bilinears(source);
  const double pref = -source.coupling / (2.0 * source.energy());
  FourPotentialSample out;
  out.at = x;
  out.phi = pref * bil[0] * kernel;
  out.vector_potential = pref * kernel * Vec3{bil[1], bil[2], bil[3]};
  return out;
}

Vec3 convection_current_vector(const ChargeSource& source) {
  const auto bil = forward_bilinears(source);
  return (-source.coupling / (2.0 * source.energy())) * Vec3{bil[1], bil[2], bil[3]};
}

namespace {

// Gaussian bump of unit integral.
double bump(double r, double w) {
  const double t = r / w;
  return std::exp(-0.5 * t * t) / (std::pow(2.0 * kPi, 1.5) * w * w * w);
}

// Hessian of G(r) = erf(r / (sqrt(2) w)) / (4 pi r), the Poisson potential of
// the bump: H_il = alpha rhat_i rhat_l + beta delta_il. Removing the
// longitudinal Fourier component of a bump current C g_w(r) amounts to
// adding H C, so j_T = C g_w + (alpha (rhat.C) rhat + beta C).
void bump_hessian_coeffs(double r, double w, double& alpha, double& beta) {
  const double a = 1.0 / (std::sqrt(2.0) * w);
  if (r < 1e-3 * w) {
    // Series around r = 0; the closed form loses all digits to cancellation.
    const double pref = 1.0 / (2.0 * std::pow(kPi, 1.5));
    const double a3 = a * a * a;
    const double a5 = a3 * a * a;
    const double a7 = a5 * a * a;
    const double r2 = r * r;
    beta = pref * (-2.0 * a3 / 3.0 + 2.0 * a5 * r2 / 5.0 - a7 * r2 * r2 / 7.0);
    alpha = pref * (4.0 * a5 * r2 / 5.0 - 4.0 * a7 * r2 * r2 / 7.0);
    return;
  }
  const double u = a * r;
  const double erfu = std::erf(u);
  const double s = std::sqrt(2.0 / kPi) * std::exp(-0.5 * (r / w) * (r / w)) / w;  // d erf(u)/dr
  const double sp = -(r / (w * w)) * s;
  const double g1 = s / (4.0 * kPi * r) - erfu / (4.0 * kPi * r * r);           // G'
  const double g2 = sp / (4.0 * kPi * r) - 2.0 * s / (4.0 * kPi * r * r) +
                    erfu / (2.0 * kPi * r * r * r);                              // G''
  beta = g1 / r;
  alpha = g2 - beta;
}

}  // namespace

double charge_density_at(const SourceEnsemble& ensemble, const Vec3& x, double bump_width) {
  if (!(bump_width > 0.0)) throw DomainError("charge_density_at: bump width must be positive");
  double rho = 0.0;
  for (const auto& s : ensemble.sources) {
    rho += -s.coupling * bump(norm(x - s.center), bump_width);
  }
  return rho;
}

Vec3 current_density_at(const SourceEnsemble& ensemble, const Vec3& x, double bump_width) {
  if (!(bump_width > 0.0)) throw DomainError("current_density_at: bump width must be positive");
  Vec3 j{};
  for (const auto& s : ensemble.sources) {
    const Vec3 c = convection_current_vector(s);
    const Vec3 d = x - s.center;
    const double r = norm(d);
    double alpha = 0.0, beta = 0.0;
    bump_hessian_coeffs(r, bump_width, alpha, beta);
    j += bump(r, bump_width) * c + beta * c;
    if (r > 0.0) {
      const Vec3 rhat = d / r;
      j += (alpha * dot(rhat, c)) * rhat;
    }
  }
  return j;
}

GridField current_density(const SourceEnsemble& ensemble, const GridSpec& spec,
                          double bump_width) {
  validate(ensemble);
  validate(spec);
  if (bump_width < 2.0 * spec.spacing) {
    throw ResolutionError("current_density: bump width must be >= 2 * grid spacing");
  }
  GridField f = make_grid_field(spec, {"j0", "jx", "jy", "jz"});
  const int nx = spec.dims[0], ny = spec.dims[1], nz = spec.dims[2];
  parallel_for(spec.node_count(), [&](std::size_t n) {
    const int i = static_cast<int>(n % static_cast<std::size_t>(nx));
    const int j = static_cast<int>((n / static_cast<std::size_t>(nx)) %
                                   static_cast<std::size_t>(ny));
    const int k = static_cast<int>(n / (static_cast<std::size_t>(nx) *
                                        static_cast<std::size_t>(ny)));
    const Vec3 x = spec.node(i, j, k);
    require_away_from_centers(ensemble, x, "current_density");
    f.at(n, 0) = charge_density_at(ensemble, x, bump_width);
    const Vec3 jv = current_density_at(ensemble, x, bump_width);
    f.at(n, 1) = jv.x;
    f.at(n, 2) = jv.y;
    f.at(n, 3) = jv.z;
  });
  (void)nz;
  return f;
}

EBSample electromagnetic_fields(const SourceEnsemble& ensemble, const Vec3& x) {
  validate(ensemble);
  require_away_from_centers(ensemble, x, "electromagnetic_fields");
  EBSample out;
  out.at = x;
  for (const auto& s : ensemble.sources) {
    const Vec3 d = x - s.center;
    const double r = norm(d);
    const double r3 = r * r * r;
    out.e += (-s.coupling / (4.0 * kPi * r3)) * d;
    const auto bil = forward_bilinears(s);
    const Vec3 spat{bil[1], bil[2], bil[3]};
    out.b += (-s.coupling / (8.0 * kPi * s.energy() * r3)) * cross(spat, d);
  }
  return out;
}

MaxwellResidualResult maxwell_residual(const SourceEnsemble& ensemble, const GridSpec& spec,
                                       double bump_width, double exclusion_radius) {
  validate(ensemble);
  validate(spec);
  const double h = spec.spacing;
  if (bump_width < 2.0 * h) {
    throw ResolutionError("maxwell_residual: bump width must be >= 2 * grid spacing");
  }
  const double excl = std::max(exclusion_radius, 3.0 * h);

  const int nx = spec.dims[0], ny = spec.dims[1], nz = spec.dims[2];
  if (nx < 5 || ny < 5 || nz < 5) {
    throw DomainError("maxwell_residual: grid needs at least 5 nodes per axis");
  }

  // Potential and current sampled everywhere first; stencils read neighbors.
  GridField a = make_grid_field(spec, {"phi", "ax", "ay", "az"});
  parallel_for(spec.node_count(), [&](std::size_t n) {
    const int i = static_cast<int>(n % static_cast<std::size_t>(nx));
    const int j = static_cast<int>((n / static_cast<std::size_t>(nx)) %
                                   static_cast<std::size_t>(ny));
    const int k = static_cast<int>(n / (static_cast<std::size_t>(nx) *
                                        static_cast<std::size_t>(ny)));
    const FourPotentialSample s = potential_closed_form(ensemble, spec.node(i, j, k));
    a.at(n, 0) = s.phi;
    a.at(n, 1) = s.vector_potential.x;
    a.at(n, 2) = s.vector_potential.y;
    a.at(n, 3) = s.vector_potential.z;
  });
  const GridField j_reg = current_density(ensemble, spec, bump_width);

  MaxwellResidualResult out;
  out.residual = make_grid_field(spec, {"r0", "rx", "ry", "rz"});
  out.valid.assign(spec.node_count(), 0);
  out.exclusion_radius = excl;

  const auto div_at = [&](int i, int j, int k) {
    return (a.at(spec.index(i + 1, j, k), 1) - a.at(spec.index(i - 1, j, k), 1) +
            a.at(spec.index(i, j + 1, k), 2) - a.at(spec.index(i, j - 1, k), 2) +
            a.at(spec.index(i, j, k + 1), 3) - a.at(spec.index(i, j, k - 1), 3)) /
           (2.0 * h);
  };

  double min_valid_source_dist = std::numeric_limits<double>::infinity();
  for (int k = 2; k < nz - 2; ++k) {
    for (int j = 2; j < ny - 2; ++j) {
      for (int i = 2; i < nx - 2; ++i) {
        const Vec3 x = spec.node(i, j, k);
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& s : ensemble.sources) dist = std::min(dist, norm(x - s.center));
        if (dist < excl) continue;

        const std::size_t n = spec.index(i, j, k);
        out.valid[n] = 1;
        min_valid_source_dist = std::min(min_valid_source_dist, dist);

        for (int c = 0; c < 4; ++c) {
          const double lap = (a.at(spec.index(i + 1, j, k), c) + a.at(spec.index(i - 1, j, k), c) +
                              a.at(spec.index(i, j + 1, k), c) + a.at(spec.index(i, j - 1, k), c) +
                              a.at(spec.index(i, j, k + 1), c) + a.at(spec.index(i, j, k - 1), c) -
                              6.0 * a.at(n, c)) /
                             (h * h);
          double grad_div = 0.0;
          if (c == 1) grad_div = (div_at(i + 1, j, k) - div_at(i - 1, j, k)) / (2.0 * h);
          if (c == 2) grad_div = (div_at(i, j + 1, k) - div_at(i, j - 1, k)) / (2.0 * h);
          if (c == 3) grad_div = (div_at(i, j, k + 1) - div_at(i, j, k - 1)) / (2.0 * h);
          const double res = lap - grad_div + j_reg.at(n, c);
          out.residual.at(n, c) = res;
          auto& mx = out.max_abs[static_cast<std::size_t>(c)];
          mx = std::max(mx, std::abs(res));
        }
      }
    }
  }
  out.coarse_grid_warning =
      std::isfinite(min_valid_source_dist) ? (h > 0.1 * min_valid_source_dist) : true;
  return out;
}

double sphere_flux(const SourceEnsemble& ensemble, const Vec3& center, double radius,
                   int theta_steps, int phi_steps) {
  if (!(radius > 0.0)) throw DomainError("sphere_flux: radius must be positive");
  if (theta_steps < 1 || phi_steps < 1) throw DomainError("sphere_flux: steps must be >= 1");
  const double dth = kPi / theta_steps;
  const double dph = 2.0 * kPi / phi_steps;
  double flux = 0.0;
  for (int ti = 0; ti < theta_steps; ++ti) {
    const double th = (ti + 0.5) * dth;
    const double sth = std::sin(th), cth = std::cos(th);
    for (int pi = 0; pi < phi_steps; ++pi) {
      const double ph = (pi + 0.5) * dph;
      const Vec3 n{sth * std::cos(ph), sth * std::sin(ph), cth};
      const EBSample s = electromagnetic_fields(ensemble, center + radius * n);
      flux += dot(s.e, n) * radius * radius * sth * dth * dph;
    }
  }
  return flux;
}

double circle_integral_b(const SourceEnsemble& ensemble, const Vec3& center, const Vec3& normal,
                         double radius, int steps) {
  if (!(radius > 0.0)) throw DomainError("circle_integral_b: radius must be positive");
  if (steps < 3) throw DomainError("circle_integral_b: steps must be >= 3");
  const Vec3 n = normalized(normal);
  Vec3 e1, e2;
  tangent_frame(n, e1, e2);
  const double dphi = 2.0 * kPi / steps;
  double acc = 0.0;
  for (int s = 0; s < steps; ++s) {
    const double ph = (s + 0.5) * dphi;
    const Vec3 radial = std::cos(ph) * e1 + std::sin(ph) * e2;
    const Vec3 tangent = -std::sin(ph) * e1 + std::cos(ph) * e2;
    const EBSample f = electromagnetic_fields(ensemble, center + radius * radial);
    acc += dot(f.b, tangent) * radius * dphi;
  }
  return acc;
}

double disk_current_flux(const SourceEnsemble& ensemble, const Vec3& center, const Vec3& normal,
                         double radius, double bump_width, int radial_steps, int angular_steps) {
  if (!(radius > 0.0)) throw DomainError("disk_current_flux: radius must be positive");
  if (radial_steps < 1 || angular_steps < 3) {
    throw DomainError("disk_current_flux: quadrature steps too small");
  }
  const Vec3 n = normalized(normal);
  Vec3 e1, e2;
  tangent_frame(n, e1, e2);
  const double dr = radius / radial_steps;
  const double dphi = 2.0 * kPi / angular_steps;
  std::vector<double> ring_sums(static_cast<std::size_t>(radial_steps), 0.0);
  parallel_for(static_cast<std::size_t>(radial_steps), [&](std::size_t ri) {
    const double rho = (static_cast<double>(ri) + 0.5) * dr;
    double acc = 0.0;
    for (int ai = 0; ai < angular_steps; ++ai) {
      const double ph = (ai + 0.5) * dphi;
      const Vec3 x = center + rho * (std::cos(ph) * e1 + std::sin(ph) * e2);
      acc += dot(current_density_at(ensemble, x, bump_width), n) * rho * dr * dphi;
    }
    ring_sums[ri] = acc;
  });
  double flux = 0.0;
  for (const double v : ring_sums) flux += v;
  return flux;
}

}  // namespace qedem
