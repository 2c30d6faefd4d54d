#pragma once

#include <variant>
#include <vector>

#include "qedem/constants.hpp"
#include "qedem/fields.hpp"
#include "qedem/vec3.hpp"

namespace qedem {

// Infinite ideal solenoid: B = 0 outside, total flux `flux` confined to the
// tube of radius `radius` around the axis. Outside the tube
//   A(x) = flux / (2 pi rho) * phi_hat,
// the pure-gauge form whose loop integrals count windings. Field values
// inside the tube are not modeled; asking for them is a domain error.
struct IdealSolenoid {
  Vec3 axis_point{0, 0, 0};
  Vec3 axis_dir{0, 0, 1};
  double flux = 0.0;
  double radius = 1.0;
};

// Solenoid built from charge sources on stacked rings, every source given a
// tangential momentum. Fields come from the ensemble's closed forms, so this
// model has genuine (small) exterior leakage.
struct SourceArraySolenoid {
  SourceEnsemble ensemble;
  Vec3 axis_point{0, 0, 0};
  Vec3 axis_dir{0, 0, 1};
  double radius = 1.0;
};

// Stacked-ring factory, axis = z through the origin, rings centered on it.
// ring_count rings with pitch spacing, per_ring sources per ring, tangential
// momentum magnitude k_mag. Defaults follow the CLI documentation.
SourceArraySolenoid make_ring_array(int ring_count, int per_ring, double ring_radius,
                                    double pitch, double k_mag,
                                    double mass = kDefaultMass,
                                    double coupling = kDefaultCoupling);

using SolenoidModel = std::variant<IdealSolenoid, SourceArraySolenoid>;

// Distance from x to the solenoid axis.
double axis_distance(const SolenoidModel& model, const Vec3& x);

// Vector potential of the model at x. Ideal model: throws DomainError for
// points inside the tube.
Vec3 vector_potential(const SolenoidModel& model, const Vec3& x);

// Magnetic field of the model at x. Ideal model: exactly zero outside,
// DomainError inside.
Vec3 b_field(const SolenoidModel& model, const Vec3& x);

// Piecewise-linear path through the listed vertices.
struct Path {
  std::vector<Vec3> vertices;

  double length() const;
};

// Throws DomainError unless the path has >= 2 vertices.
void validate(const Path& path);

// Composite-midpoint quadrature of A . dx along the path,
// steps_per_segment midpoint samples per straight segment. Deterministic for
// fixed inputs. Throws DomainError if a sample lands inside an ideal tube.
double line_integral_a(const SolenoidModel& model, const Path& path, int steps_per_segment);

// Magnetic phase accumulated along the path: -coupling * line_integral_a.
// Returned unwrapped; use wrap_phase for the principal value.
double path_phase(const SolenoidModel& model, const Path& path, double coupling,
                  int steps_per_segment);

// Maps into (-pi, pi].
double wrap_phase(double phase);

// Exact A . dx integral of an ideal solenoid along one straight segment:
// (flux / 2 pi) times the azimuthal angle the segment subtends at the axis.
// Used by the interference pattern, where midpoint quadrature error would
// mask the exact flux periodicity. Throws DomainError when the segment dips
// inside the tube.
double ideal_segment_integral(const IdealSolenoid& sol, const Vec3& from, const Vec3& to);

// Two-slit layout probed on a line across the screen:
// sample i sits at screen_origin + offset_i * screen_axis. Both interfering
// paths are anchored at `source` (source -> slit -> screen point), so only
// path differences carry physics. The wave phase along a leg is
// |wavevector| * leg length.
struct DoubleSlitGeometry {
  Vec3 source{};
  Vec3 slit1{};
  Vec3 slit2{};
  Vec3 screen_origin{};
  Vec3 screen_axis{0, 1, 0};
  Vec3 wavevector{};
  std::vector<double> screen_offsets;
};

void validate(const DoubleSlitGeometry& geometry);

struct PatternSample {
  double offset = 0.0;
  double intensity = 0.0;  // |exp(i th1) + exp(i th2)|^2, in [0, 4]
  double phase1 = 0.0;
  double phase2 = 0.0;
};

// Interference pattern with an optional solenoid threading the region
// between the two paths. The ideal model contributes through the exact
// segment integrals; a source-array model through midpoint quadrature with
// steps_per_segment samples. Pass nullptr for free propagation.
std::vector<PatternSample> interference_pattern(const DoubleSlitGeometry& geometry,
                                                const SolenoidModel* model, double coupling,
                                                int steps_per_segment = 1024);

// Offset of the central peak of `pattern`, located by argmax plus parabolic
// refinement over the sampled intensities.
double central_peak_offset(const std::vector<PatternSample>& pattern);

// Peak-to-peak distance around the pattern center (same refinement).
double fringe_spacing(const std::vector<PatternSample>& pattern);

}  // namespace qedem
