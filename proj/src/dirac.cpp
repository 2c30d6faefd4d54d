#include "qedem/dirac.hpp"

#include <algorithm>
#include <cmath>

namespace qedem {

namespace {

constexpr Complex kI = Complex(0.0, 1.0);

double max_abs_entry(const Mat2c& m) {
  double s = 0.0;
  for (const auto& e : m.a) s = std::max(s, std::abs(e));
  return s;
}

}  // namespace

Mat2c operator+(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat2c operator-(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat2c operator*(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  r.a[0] = x.a[0] * y.a[0] + x.a[1] * y.a[2];
  r.a[1] = x.a[0] * y.a[1] + x.a[1] * y.a[3];
  r.a[2] = x.a[2] * y.a[0] + x.a[3] * y.a[2];
  r.a[3] = x.a[2] * y.a[1] + x.a[3] * y.a[3];
  return r;
}

Mat2c operator*(Complex s, const Mat2c& x) {
  Mat2c r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = s * x.a[i];
  return r;
}

Mat2c adjoint(const Mat2c& x) {
  return {{std::conj(x.a[0]), std::conj(x.a[2]), std::conj(x.a[1]), std::conj(x.a[3])}};
}

Mat4c Mat4c::identity() {
  Mat4c m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = Complex(1, 0);
  return m;
}

Mat4c operator+(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat4c operator*(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex s(0, 0);
      for (int k = 0; k < 4; ++k) s += x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

Mat4c operator*(Complex s, const Mat4c& x) {
  Mat4c r;
  for (std::size_t i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}

SpinorComponents operator*(const Mat4c& m, const SpinorComponents& v) {
  SpinorComponents r{};
  for (int i = 0; i < 4; ++i) {
    Complex s(0, 0);
    for (int j = 0; j < 4; ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

const Mat2c& pauli(int i) {
  static const Mat2c s1{{Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)}};
  static const Mat2c s2{{Complex(0, 0), -kI, kI, Complex(0, 0)}};
  static const Mat2c s3{{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)}};
  switch (i) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw DomainError("pauli: index must be 1, 2 or 3");
  }
}

Mat2c momentum_dot_sigma(const Vec3& k) {
  return {{Complex(k.z, 0), Complex(k.x, -k.y), Complex(k.x, k.y), Complex(-k.z, 0)}};
}

namespace {

Mat4c make_gamma(int mu) {
  Mat4c g;
  if (mu == 0) {
    // [[0, I], [I, 0]]
    g.at(0, 2) = g.at(1, 3) = g.at(2, 0) = g.at(3, 1) = Complex(1, 0);
    return g;
  }
  const Mat2c& s = pauli(mu);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      g.at(r, c + 2) = s.at(r, c);
      g.at(r + 2, c) = -s.at(r, c);
    }
  }
  return g;
}

}  // namespace

const Mat4c& gamma(int mu) {
  static const std::array<Mat4c, 4> tab = {make_gamma(0), make_gamma(1), make_gamma(2),
                                           make_gamma(3)};
  if (mu < 0 || mu > 3) throw DomainError("gamma: index must be in 0..3");
  return tab[static_cast<std::size_t>(mu)];
}

Mat2c sqrt_hermitian_2x2(const Mat2c& m) {
  const double scale = std::max(1.0, max_abs_entry(m));
  const double herm_tol = 1e-12 * scale;
  if (std::abs(m.a[1] - std::conj(m.a[2])) > herm_tol || std::abs(m.a[0].imag()) > herm_tol ||
      std::abs(m.a[3].imag()) > herm_tol) {
    throw DomainError("sqrt_hermitian_2x2: matrix is not Hermitian");
  }

  // m = a I + b.sigma with a, b real.
  const double a = 0.5 * (m.a[0].real() + m.a[3].real());
  const double b1 = 0.5 * (m.a[1].real() + m.a[2].real());
  const double b2 = 0.5 * (m.a[2].imag() - m.a[1].imag());
  const double b3 = 0.5 * (m.a[0].real() - m.a[3].real());
  const double bn = std::sqrt(b1 * b1 + b2 * b2 + b3 * b3);

  const double lo = a - bn;
  const double hi = a + bn;
  if (lo < -1e-12 * scale) {
    throw DomainError("sqrt_hermitian_2x2: matrix has a negative eigenvalue");
  }
  const double sq_lo = std::sqrt(std::max(lo, 0.0));
  const double sq_hi = std::sqrt(std::max(hi, 0.0));

  // sqrt(m) = p I + (q/|b|) (m - a I); the b-direction is undefined when
  // |b| = 0, but then q = 0 as well and the root is sq_hi * I.
  const double p = 0.5 * (sq_hi + sq_lo);
  Mat2c r = Mat2c::identity();
  r = Complex(p, 0) * r;
  if (bn > 1e-15 * scale) {
    const double q = 0.5 * (sq_hi - sq_lo);
    Mat2c dev = m;
    dev.a[0] -= Complex(a, 0);
    dev.a[3] -= Complex(a, 0);
    r = r + Complex(q / bn, 0) * dev;
  }
  return r;
}

DiracSpinor build_spinor(const Vec3& momentum, double mass) {
  if (!(mass > 0.0)) {
    throw DomainError("build_spinor: mass must be positive");
  }
  const double omega = std::sqrt(mass * mass + norm_squared(momentum));
  const Mat2c ks = momentum_dot_sigma(momentum);

  Mat2c lower_arg = ks;  // omega + k.sigma
  lower_arg.a[0] += omega;
  lower_arg.a[3] += omega;
  Mat2c upper_arg = Complex(-1, 0) * ks;  // omega - k.sigma
  upper_arg.a[0] += omega;
  upper_arg.a[3] += omega;

  const Mat2c upper = sqrt_hermitian_2x2(upper_arg);
  const Mat2c lower = sqrt_hermitian_2x2(lower_arg);

  // Apply each root to xi = (1, 0): take the first column.
  DiracSpinor u;
  u.components = {upper.a[0], upper.a[2], lower.a[0], lower.a[2]};
  u.momentum = momentum;
  u.mass = mass;
  u.energy = omega;
  return u;
}

Complex bilinear(const DiracSpinor& u_out, int mu, const DiracSpinor& u_in) {
  const SpinorComponents w = gamma(0) * (gamma(mu) * u_in.components);
  Complex s(0, 0);
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(u_out.components[i]) * w[i];
  return s;
}

std::array<Complex, 4> bilinear_four_vector(const DiracSpinor& u_out, const DiracSpinor& u_in) {
  return {bilinear(u_out, 0, u_in), bilinear(u_out, 1, u_in), bilinear(u_out, 2, u_in),
          bilinear(u_out, 3, u_in)};
}

PolarizationPair polarization_vectors(const Vec3& k) {
  const double kn = norm(k);
  if (!(kn > 0.0)) {
    throw DomainError("polarization_vectors: wavevector must be nonzero");
  }
  PolarizationPair pair;
  pair.wavevector = k;
  const double s2 = k.x * k.x + k.y * k.y;
  const double s = std::sqrt(s2);
  if (s <= 1e-12 * kn) {
    // k along +/- z; continuation of the generic formulas along (eps, 0, kz).
    const double sign = (k.z >= 0.0) ? 1.0 : -1.0;
    pair.v1 = {0.0, -1.0, 0.0};
    pair.v2 = {sign, 0.0, 0.0};
    return pair;
  }
  pair.v1 = Vec3{k.y, -k.x, 0.0} / s;
  pair.v2 = Vec3{k.x * k.z, k.y * k.z, -s2} / (s * kn);
  return pair;
}

}  // namespace qedem
