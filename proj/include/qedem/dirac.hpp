#pragma once

#include <array>
#include <complex>

#include "qedem/errors.hpp"
#include "qedem/vec3.hpp"

namespace qedem {

using Complex = std::complex<double>;

// Row-major complex 2x2 matrix.
struct Mat2c {
  std::array<Complex, 4> a{};

  static Mat2c identity() { return {{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)}}; }
  Complex at(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }
};

Mat2c operator+(const Mat2c& x, const Mat2c& y);
Mat2c operator-(const Mat2c& x, const Mat2c& y);
Mat2c operator*(const Mat2c& x, const Mat2c& y);
Mat2c operator*(Complex s, const Mat2c& x);
Mat2c adjoint(const Mat2c& x);

// Row-major complex 4x4 matrix.
struct Mat4c {
  std::array<Complex, 16> a{};

  static Mat4c identity();
  Complex at(int r, int c) const { return a[static_cast<std::size_t>(4 * r + c)]; }
  Complex& at(int r, int c) { return a[static_cast<std::size_t>(4 * r + c)]; }
};

Mat4c operator+(const Mat4c& x, const Mat4c& y);
Mat4c operator*(const Mat4c& x, const Mat4c& y);
Mat4c operator*(Complex s, const Mat4c& x);

using SpinorComponents = std::array<Complex, 4>;

SpinorComponents operator*(const Mat4c& m, const SpinorComponents& v);

// Pauli matrix sigma^i for i in {1,2,3}.
const Mat2c& pauli(int i);

// k.sigma = kx sigma^1 + ky sigma^2 + kz sigma^3.
Mat2c momentum_dot_sigma(const Vec3& k);

// Gamma matrix gamma^mu, mu in {0,1,2,3}, in the chiral (Weyl) basis:
//   gamma^0 = [[0, I], [I, 0]],   gamma^i = [[0, sigma^i], [-sigma^i, 0]].
// Satisfies gamma^mu gamma^nu + gamma^nu gamma^mu = 2 eta^{mu nu} I with
// eta = diag(+,-,-,-).
const Mat4c& gamma(int mu);

// Principal square root of a Hermitian positive semidefinite 2x2 matrix via
// its closed-form spectral decomposition: writing m = a I + b.sigma, the
// eigenvalues are a +/- |b| and the root keeps the same eigenvectors with
// the positive branch of sqrt on each eigenvalue.
// Requires m Hermitian within 1e-12 and eigenvalues >= -1e-12 (relative to
// the matrix scale); tiny negative eigenvalues are clamped to zero.
Mat2c sqrt_hermitian_2x2(const Mat2c& m);

// Positive-energy plane wave spinor together with the kinematics it was
// built from. components = (sqrt(omega - k.sigma) xi, sqrt(omega + k.sigma) xi)
// with xi = (1,0), normalized so u^dag u = 2 omega.
struct DiracSpinor {
  SpinorComponents components{};
  Vec3 momentum{};
  double mass = 0.0;
  double energy = 0.0;
};

// Requires mass > 0.
DiracSpinor build_spinor(const Vec3& momentum, double mass);

// ubar_out gamma^mu u_in with ubar = u^dag gamma^0.
Complex bilinear(const DiracSpinor& u_out, int mu, const DiracSpinor& u_in);

// All four components mu = 0..3 at once.
std::array<Complex, 4> bilinear_four_vector(const DiracSpinor& u_out, const DiracSpinor& u_in);

// Two real unit vectors orthogonal to the wavevector and to each other.
struct PolarizationPair {
  Vec3 v1{};
  Vec3 v2{};
  Vec3 wavevector{};
};

// Orientation of the returned pair: cross(v1, v2) = +k/|k| (tested).
inline constexpr int kPolarizationHandedness = +1;

// For k = (k1,k2,k3) with k1^2 + k2^2 > 0:
//   v1 = (k2, -k1, 0) / sqrt(k1^2 + k2^2)
//   v2 = (k1 k3, k2 k3, -(k1^2 + k2^2)) / (sqrt(k1^2 + k2^2) |k|)
// For k parallel to the z axis the k1 -> 0+ limit along (eps, 0, k3) is used:
//   v1 = (0, -1, 0),  v2 = (sign(k3), 0, 0).
// Requires |k| > 0.
PolarizationPair polarization_vectors(const Vec3& k);

}  // namespace qedem
