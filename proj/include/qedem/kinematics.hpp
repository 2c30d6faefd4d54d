#pragma once

#include <array>

#include "qedem/errors.hpp"
#include "qedem/vec3.hpp"

namespace qedem {

// Contravariant four-vector (t, x, y, z) under the metric diag(+,-,-,-).
// Serves both for events and for energy-momentum.
struct FourVector {
  double t = 0.0;
  Vec3 x{};
};

inline FourVector operator+(const FourVector& a, const FourVector& b) {
  return {a.t + b.t, a.x + b.x};
}
inline FourVector operator-(const FourVector& a, const FourVector& b) {
  return {a.t - b.t, a.x - b.x};
}
inline FourVector operator*(double s, const FourVector& a) { return {s * a.t, s * a.x}; }

// a.b = a0*b0 - a1*b1 - a2*b2 - a3*b3
double minkowski_dot(const FourVector& a, const FourVector& b);
inline double minkowski_norm(const FourVector& a) { return minkowski_dot(a, a); }

// Energy-momentum four-vector of a particle of the given mass,
// omega = sqrt(mass^2 + |momentum|^2). Requires mass > 0.
FourVector on_shell(double mass, const Vec3& momentum);

enum class Axis { X = 0, Y = 1, Z = 2 };

// Velocity/gamma pair for a boost; gamma is derived from the velocity at
// construction, so the pair can never drift apart. Requires |velocity| < 1.
class BoostParameters {
 public:
  explicit BoostParameters(double velocity);
  double velocity() const noexcept { return velocity_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double velocity_ = 0.0;
  double gamma_ = 1.0;
};

// Boost along one coordinate axis with the sign convention
//   t' = gamma (t + v z),   z' = gamma (z + v t)
// (shown here for Axis::Z); transverse components are untouched. The same
// map applies to events and to energy-momentum vectors, which keeps plane
// wave phases omega*t - k.x invariant.
FourVector boost_along(const BoostParameters& boost, Axis axis, const FourVector& u);

inline FourVector boost_z(const BoostParameters& boost, const FourVector& u) {
  return boost_along(boost, Axis::Z, u);
}

// Row-major 3x3 matrix, used for spatial rotations.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return Mat3{}; }
  double at(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
};

Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& a);

// Right-handed rotation by `angle` about `axis` (Rodrigues form).
// Requires axis != 0; the axis is normalized internally.
Mat3 rotation_about(const Vec3& axis, double angle);

// Rotates the spatial part of a four-vector, leaving the time component.
FourVector rotate_spatial(const Mat3& r, const FourVector& u);

}  // namespace qedem
