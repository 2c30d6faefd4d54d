#include "qedem/kinematics.hpp"

#include <cmath>

namespace qedem {

double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - dot(a.x, b.x);
}

FourVector on_shell(double mass, const Vec3& momentum) {
  if (!(mass > 0.0)) {
    throw DomainError("on_shell: mass must be positive");
  }
  return {std::sqrt(mass * mass + norm_squared(momentum)), momentum};
}

BoostParameters::BoostParameters(double velocity) : velocity_(velocity) {
  if (!(std::abs(velocity) < 1.0)) {
    throw DomainError("BoostParameters: |velocity| must be < 1");
  }
  gamma_ = 1.0 / std::sqrt(1.0 - velocity * velocity);
}

FourVector boost_along(const BoostParameters& boost, Axis axis, const FourVector& u) {
  const double g = boost.gamma();
  const double v = boost.velocity();
  FourVector out = u;
  double* comp = nullptr;
  switch (axis) {
    case Axis::X: comp = &out.x.x; break;
    case Axis::Y: comp = &out.x.y; break;
    case Axis::Z: comp = &out.x.z; break;
  }
  const double par = *comp;
  out.t = g * (u.t + v * par);
  *comp = g * (par + v * u.t);
  return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z,
          a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
          a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) {
        s += a.m[static_cast<std::size_t>(3 * r + k)] * b.m[static_cast<std::size_t>(3 * k + col)];
      }
      c.m[static_cast<std::size_t>(3 * r + col)] = s;
    }
  }
  return c;
}

Mat3 transpose(const Mat3& a) {
  Mat3 t;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      t.m[static_cast<std::size_t>(3 * r + c)] = a.m[static_cast<std::size_t>(3 * c + r)];
    }
  }
  return t;
}

Mat3 rotation_about(const Vec3& axis, double angle) {
  const double len = norm(axis);
  if (!(len > 0.0)) {
    throw DomainError("rotation_about: axis must be nonzero");
  }
  const Vec3 n = axis / len;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double ic = 1.0 - c;
  Mat3 r;
  r.m = {c + n.x * n.x * ic,       n.x * n.y * ic - n.z * s, n.x * n.z * ic + n.y * s,
         n.y * n.x * ic + n.z * s, c + n.y * n.y * ic,       n.y * n.z * ic - n.x * s,
         n.z * n.x * ic - n.y * s, n.z * n.y * ic + n.x * s, c + n.z * n.z * ic};
  return r;
}

FourVector rotate_spatial(const Mat3& r, const FourVector& u) { return {u.t, r * u.x}; }

}  // namespace qedem
