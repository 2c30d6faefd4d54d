#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qedem/kinematics.hpp"
#include "qedem/vec3.hpp"

namespace qedem {

// One Fourier component of a real scalar field amplitude:
//   contribution(x, t) = i [ a e^{-i(w t - k.x)} - a* e^{+i(w t - k.x)} ].
// Static components have omega = 0.
struct ModeComponent {
  double omega = 0.0;
  Vec3 k{};
  std::complex<double> amplitude{};
};

// Sum of the component contributions at event (t, x). Real by construction.
double sample_field(std::span<const ModeComponent> modes, const Vec3& x, double t);

// Same sum, but requires every component static (|omega| <= 1e-12);
// throws DomainError otherwise. The result is then t-independent.
double sample_static_field(std::span<const ModeComponent> modes, const Vec3& x, double t = 0.0);

// Applies the z-axis boost to every component:
//   w' = gamma (w + v kz),  kz' = gamma (kz + v w),
// transverse k and amplitudes unchanged. Together with boost_z on events
// this leaves each plane wave phase w t - k.x unchanged.
std::vector<ModeComponent> boost_mode_set(std::span<const ModeComponent> modes,
                                          const BoostParameters& boost);

// w / |k|. Requires |k| > 0. For a boosted static mode this is
// gamma v kz / |k'|, which never exceeds |v|.
double phase_velocity(const ModeComponent& mode);

// True when any component has |omega| > 1e-12.
bool check_time_varying(std::span<const ModeComponent> modes);

// Radiation mode of the free electromagnetic field: wavevector k (w = |k|),
// polarization index lambda in {1, 2} choosing v^lambda from
// polarization_vectors, complex amplitude a.
struct FreeFieldMode {
  Vec3 k{};
  int lambda = 1;
  std::complex<double> amplitude{};
};

struct ModeEBSample {
  Vec3 e{};
  Vec3 b{};
};

// Fields of one radiation mode at event (t, x):
//   E = i sqrt(w/2)   [ a v^l e^{-i(w t - k.x)} - c.c. ]
//   B = i 1/sqrt(2 w) [ a (k x v^l) e^{-i(w t - k.x)} - c.c. ]
// Both are real, mutually orthogonal, transverse to k, and |E| = |B|
// pointwise; the pair satisfies the free Maxwell equations exactly.
// Requires |k| > 0 and lambda in {1, 2}.
ModeEBSample femf_mode_fields(const FreeFieldMode& mode, const Vec3& x, double t);

// CSV round trip, header "omega,kx,ky,kz,re_amp,im_amp".
void write_modes_csv(const std::string& path, std::span<const ModeComponent> modes);
std::vector<ModeComponent> read_modes_csv(const std::string& path);

}  // namespace qedem
