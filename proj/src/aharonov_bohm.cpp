#include "qedem/aharonov_bohm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qedem/parallel.hpp"

namespace qedem {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct AxisFrame {
  Vec3 point{};
  Vec3 dir{};  // unit
  Vec3 e1{};
  Vec3 e2{};  // (e1, e2, dir) right-handed
};

AxisFrame axis_frame(const Vec3& point, const Vec3& dir) {
  AxisFrame f;
  f.point = point;
  const double len = norm(dir);
  if (!(len > 0.0)) throw DomainError("solenoid: axis direction must be nonzero");
  f.dir = dir / len;
  const Vec3 seed = std::abs(f.dir.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  f.e1 = normalized(cross(seed, f.dir));
  f.e2 = cross(f.dir, f.e1);
  return f;
}

// In-plane coordinates of x relative to the axis.
void project(const AxisFrame& f, const Vec3& x, double& u, double& v) {
  const Vec3 d = x - f.point;
  u = dot(d, f.e1);
  v = dot(d, f.e2);
}

double segment_min_axis_distance(const AxisFrame& f, const Vec3& a, const Vec3& b) {
  double u0, v0, u1, v1;
  project(f, a, u0, v0);
  project(f, b, u1, v1);
  const double du = u1 - u0, dv = v1 - v0;
  const double len2 = du * du + dv * dv;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-(u0 * du + v0 * dv) / len2, 0.0, 1.0);
  const double cu = u0 + t * du, cv = v0 + t * dv;
  return std::sqrt(cu * cu + cv * cv);
}

}  // namespace

SourceArraySolenoid make_ring_array(int ring_count, int per_ring, double ring_radius,
                                    double pitch, double k_mag, double mass, double coupling) {
  if (ring_count < 1) throw DomainError("make_ring_array: ring_count must be >= 1");
  if (per_ring < 3) throw DomainError("make_ring_array: per_ring must be >= 3");
  if (!(ring_radius > 0.0)) throw DomainError("make_ring_array: ring_radius must be positive");
  if (!(pitch > 0.0)) throw DomainError("make_ring_array: pitch must be positive");
  if (!(k_mag > 0.0)) throw DomainError("make_ring_array: k_mag must be positive");

  SourceArraySolenoid sol;
  sol.axis_point = {0, 0, 0};
  sol.axis_dir = {0, 0, 1};
  sol.radius = ring_radius;
  const double z0 = -0.5 * (ring_count - 1) * pitch;
  for (int r = 0; r < ring_count; ++r) {
    const double z = z0 + r * pitch;
    for (int s = 0; s < per_ring; ++s) {
      const double ph = 2.0 * kPi * s / per_ring;
      ChargeSource src;
      src.center = {ring_radius * std::cos(ph), ring_radius * std::sin(ph), z};
      src.momentum = k_mag * Vec3{-std::sin(ph), std::cos(ph), 0.0};
      src.mass = mass;
      src.coupling = coupling;
      sol.ensemble.sources.push_back(src);
    }
  }
  return sol;
}

double axis_distance(const SolenoidModel& model, const Vec3& x) {
  return std::visit(
      [&](const auto& m) {
        const AxisFrame f = axis_frame(m.axis_point, m.axis_dir);
        double u, v;
        project(f, x, u, v);
        return std::sqrt(u * u + v * v);
      },
      model);
}

Vec3 vector_potential(const SolenoidModel& model, const Vec3& x) {
  if (const auto* ideal = std::get_if<IdealSolenoid>(&model)) {
    const AxisFrame f = axis_frame(ideal->axis_point, ideal->axis_dir);
    double u, v;
    project(f, x, u, v);
    const double rho2 = u * u + v * v;
    if (rho2 < ideal->radius * ideal->radius) {
      throw DomainError("ideal solenoid: potential requested inside the tube");
    }
    // flux/(2 pi rho) * phi_hat, phi_hat = dir x rho_hat.
    const double s = ideal->flux / (2.0 * kPi * rho2);
    return s * (cross(f.dir, u * f.e1 + v * f.e2));
  }
  const auto& arr = std::get<SourceArraySolenoid>(model);
  return potential_closed_form(arr.ensemble, x).vector_potential;
}

Vec3 b_field(const SolenoidModel& model, const Vec3& x) {
  if (const auto* ideal = std::get_if<IdealSolenoid>(&model)) {
    if (axis_distance(model, x) < ideal->radius) {
      throw DomainError("ideal solenoid: field requested inside the tube");
    }
    return {0, 0, 0};
  }
  const auto& arr = std::get<SourceArraySolenoid>(model);
  return electromagnetic_fields(arr.ensemble, x).b;
}

double Path::length() const {
  double acc = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) acc += norm(vertices[i] - vertices[i - 1]);
  return acc;
}

void validate(const Path& path) {
  if (path.vertices.size() < 2) throw DomainError("Path: needs at least two vertices");
}

double line_integral_a(const SolenoidModel& model, const Path& path, int steps_per_segment) {
  validate(path);
  if (steps_per_segment < 1) throw DomainError("line_integral_a: steps_per_segment must be >= 1");
  // Midpoint sampling cannot prove a segment stays outside an ideal tube, so
  // that is checked per segment up front.
  if (const auto* ideal = std::get_if<IdealSolenoid>(&model)) {
    const AxisFrame f = axis_frame(ideal->axis_point, ideal->axis_dir);
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
      if (segment_min_axis_distance(f, path.vertices[i - 1], path.vertices[i]) < ideal->radius) {
        throw DomainError("line_integral_a: path crosses the solenoid interior");
      }
    }
  }
  double acc = 0.0;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const Vec3 a = path.vertices[i - 1];
    const Vec3 step = (path.vertices[i] - a) / steps_per_segment;
    for (int s = 0; s < steps_per_segment; ++s) {
      const Vec3 mid = a + (s + 0.5) * step;
      acc += dot(vector_potential(model, mid), step);
    }
  }
  return acc;
}

double path_phase(const SolenoidModel& model, const Path& path, double coupling,
                  int steps_per_segment) {
  if (!(coupling > 0.0)) throw DomainError("path_phase: coupling must be positive");
  return -coupling * line_integral_a(model, path, steps_per_segment);
}

double wrap_phase(double phase) {
  double w = std::remainder(phase, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

double ideal_segment_integral(const IdealSolenoid& sol, const Vec3& from, const Vec3& to) {
  const AxisFrame f = axis_frame(sol.axis_point, sol.axis_dir);
  if (segment_min_axis_distance(f, from, to) < sol.radius) {
    throw DomainError("ideal_segment_integral: segment crosses the solenoid interior");
  }
  double u0, v0, u1, v1;
  project(f, from, u0, v0);
  project(f, to, u1, v1);
  // Signed azimuthal sweep; a straight segment clear of the axis subtends
  // strictly less than pi, so the principal value is the true sweep.
  const double sweep = std::atan2(u0 * v1 - v0 * u1, u0 * u1 + v0 * v1);
  return sol.flux / (2.0 * kPi) * sweep;
}

void validate(const DoubleSlitGeometry& geometry) {
  if (norm(geometry.slit1 - geometry.slit2) <= 1e-12) {
    throw DomainError("DoubleSlitGeometry: slits must be distinct");
  }
  if (!(norm(geometry.wavevector) > 0.0)) {
    throw DomainError("DoubleSlitGeometry: wavevector must be nonzero");
  }
  if (!(norm(geometry.screen_axis) > 0.0)) {
    throw DomainError("DoubleSlitGeometry: screen axis must be nonzero");
  }
  if (geometry.screen_offsets.empty()) {
    throw DomainError("DoubleSlitGeometry: no screen sample offsets");
  }
}

namespace {

double leg_integral(const SolenoidModel* model, const Vec3& from, const Vec3& to,
                    int steps_per_segment) {
  if (model == nullptr) return 0.0;
  if (const auto* ideal = std::get_if<IdealSolenoid>(model)) {
    return ideal_segment_integral(*ideal, from, to);
  }
  Path leg;
  leg.vertices = {from, to};
  return line_integral_a(*model, leg, steps_per_segment);
}

}  // namespace

std::vector<PatternSample> interference_pattern(const DoubleSlitGeometry& geometry,
                                                const SolenoidModel* model, double coupling,
                                                int steps_per_segment) {
  validate(geometry);
  if (!(coupling > 0.0)) throw DomainError("interference_pattern: coupling must be positive");
  const Vec3 axis = normalized(geometry.screen_axis);
  const double kmag = norm(geometry.wavevector);

  if (model != nullptr) {
    if (const auto* ideal = std::get_if<IdealSolenoid>(model)) {
      for (const double off : geometry.screen_offsets) {
        if (axis_distance(*model, geometry.screen_origin + off * axis) < ideal->radius) {
          throw DomainError("interference_pattern: screen intersects the solenoid region");
        }
      }
    }
  }

  const double in1 = leg_integral(model, geometry.source, geometry.slit1, steps_per_segment);
  const double in2 = leg_integral(model, geometry.source, geometry.slit2, steps_per_segment);
  const double len_in1 = norm(geometry.slit1 - geometry.source);
  const double len_in2 = norm(geometry.slit2 - geometry.source);

  std::vector<PatternSample> pattern(geometry.screen_offsets.size());
  parallel_for(pattern.size(), [&](std::size_t i) {
    const double off = geometry.screen_offsets[i];
    const Vec3 target = geometry.screen_origin + off * axis;
    const double th1 =
        kmag * (len_in1 + norm(target - geometry.slit1)) -
        coupling * (in1 + leg_integral(model, geometry.slit1, target, steps_per_segment));
    const double th2 =
        kmag * (len_in2 + norm(target - geometry.slit2)) -
        coupling * (in2 + leg_integral(model, geometry.slit2, target, steps_per_segment));
    const std::complex<double> amp =
        std::exp(std::complex<double>(0.0, th1)) + std::exp(std::complex<double>(0.0, th2));
    pattern[i] = PatternSample{off, std::norm(amp), th1, th2};
  });
  return pattern;
}

namespace {

// Parabolic vertex through three equally indexed samples.
double refine_peak(const std::vector<PatternSample>& p, std::size_t i) {
  const double y0 = p[i - 1].intensity, y1 = p[i].intensity, y2 = p[i + 1].intensity;
  const double denom = y0 - 2.0 * y1 + y2;
  const double half_step = 0.5 * (p[i + 1].offset - p[i - 1].offset) * 0.5;
  if (denom == 0.0) return p[i].offset;
  return p[i].offset + half_step * (y0 - y2) / denom;
}

std::vector<std::size_t> local_maxima(const std::vector<PatternSample>& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i].intensity >= p[i - 1].intensity && p[i].intensity >= p[i + 1].intensity &&
        (p[i].intensity > p[i - 1].intensity || p[i].intensity > p[i + 1].intensity)) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

double central_peak_offset(const std::vector<PatternSample>& pattern) {
  if (pattern.size() < 3) throw DomainError("central_peak_offset: pattern too short");
  std::size_t best = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    if (pattern[i].intensity > pattern[best].intensity) best = i;
  }
  if (best == 0 || best + 1 == pattern.size()) {
    throw DomainError("central_peak_offset: maximum sits on the pattern edge");
  }
  return refine_peak(pattern, best);
}

double fringe_spacing(const std::vector<PatternSample>& pattern) {
  const std::vector<std::size_t> maxima = local_maxima(pattern);
  if (maxima.size() < 3) throw DomainError("fringe_spacing: need at least three maxima");
  // Peak nearest the sampled center, then its neighbors on either side.
  const double mid =
      0.5 * (pattern.front().offset + pattern.back().offset);
  std::size_t central = maxima[0];
  double best_d = std::abs(pattern[central].offset - mid);
  std::size_t central_pos = 0;
  for (std::size_t m = 1; m < maxima.size(); ++m) {
    const double d = std::abs(pattern[maxima[m]].offset - mid);
    if (d < best_d) {
      best_d = d;
      central = maxima[m];
      central_pos = m;
    }
  }
  if (central_pos == 0 || central_pos + 1 == maxima.size()) {
    throw DomainError("fringe_spacing: central peak lacks a neighbor on one side");
  }
  const double left = refine_peak(pattern, maxima[central_pos - 1]);
  const double right = refine_peak(pattern, maxima[central_pos + 1]);
  return 0.5 * (right - left);
}

}  // namespace qedem
