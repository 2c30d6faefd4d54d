#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "qedem/errors.hpp"
#include "qedem/kinematics.hpp"

using namespace qedem;

namespace {

Vec3 random_vec(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("minkowski dot uses the +--- signature") {
  const FourVector a{2.0, {1.0, 0.0, 0.0}};
  const FourVector b{3.0, {0.0, 1.0, 0.0}};
  CHECK(minkowski_dot(a, a) == doctest::Approx(4.0 - 1.0));
  CHECK(minkowski_dot(a, b) == doctest::Approx(6.0));
  const FourVector c{1.0, {0.5, -0.25, 2.0}};
  CHECK(minkowski_norm(c) == doctest::Approx(1.0 - 0.25 - 0.0625 - 4.0));
}

TEST_CASE("on_shell energy closes the mass shell") {
  const FourVector u = on_shell(1.0, {0.3, -0.4, 1.2});
  CHECK(u.t == doctest::Approx(std::sqrt(1.0 + 0.09 + 0.16 + 1.44)));
  CHECK(minkowski_norm(u) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(on_shell(2.0, {0, 0, 0}).t == doctest::Approx(2.0));
  CHECK_THROWS_AS(on_shell(0.0, {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(on_shell(-1.0, {1, 0, 0}), DomainError);
}

TEST_CASE("boost parameters derive gamma and reject superluminal input") {
  const BoostParameters b(0.6);
  CHECK(b.velocity() == doctest::Approx(0.6));
  CHECK(b.gamma() == doctest::Approx(1.25));
  CHECK(BoostParameters(0.0).gamma() == doctest::Approx(1.0));
  CHECK_THROWS_AS(BoostParameters(1.0), DomainError);
  CHECK_THROWS_AS(BoostParameters(-1.1), DomainError);
}

TEST_CASE("boost_z follows the t' = gamma (t + v z) convention") {
  const BoostParameters b(0.6);
  const FourVector u{1.0, {0.2, -0.7, 0.5}};
  const FourVector v = boost_z(b, u);
  CHECK(v.t == doctest::Approx(1.25 * (1.0 + 0.6 * 0.5)));
  CHECK(v.x.z == doctest::Approx(1.25 * (0.5 + 0.6 * 1.0)));
  CHECK(v.x.x == doctest::Approx(0.2));
  CHECK(v.x.y == doctest::Approx(-0.7));
}

TEST_CASE("boosts along each axis touch only that axis") {
  const BoostParameters b(0.3);
  const FourVector u{2.0, {0.1, 0.2, 0.3}};
  const FourVector ux = boost_along(b, Axis::X, u);
  CHECK(ux.x.y == doctest::Approx(0.2));
  CHECK(ux.x.z == doctest::Approx(0.3));
  CHECK(ux.x.x == doctest::Approx(b.gamma() * (0.1 + 0.3 * 2.0)));
  const FourVector uy = boost_along(b, Axis::Y, u);
  CHECK(uy.x.x == doctest::Approx(0.1));
  CHECK(uy.x.y == doctest::Approx(b.gamma() * (0.2 + 0.3 * 2.0)));
}

TEST_CASE("boost with -v inverts the boost") {
  std::mt19937_64 rng(12345);
  const BoostParameters fwd(0.85);
  const BoostParameters back(-0.85);
  for (int i = 0; i < 50; ++i) {
    const FourVector u{std::uniform_real_distribution<double>(-3, 3)(rng), random_vec(rng, 3)};
    const FourVector round = boost_z(back, boost_z(fwd, u));
    CHECK(round.t == doctest::Approx(u.t).epsilon(1e-12));
    CHECK(round.x.z == doctest::Approx(u.x.z).epsilon(1e-12));
  }
}

TEST_CASE("boosts preserve the invariant interval") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 100; ++i) {
    const double v = std::uniform_real_distribution<double>(-0.95, 0.95)(rng);
    const BoostParameters b(v);
    const FourVector u{std::uniform_real_distribution<double>(-2, 2)(rng), random_vec(rng, 2)};
    CHECK(minkowski_norm(boost_z(b, u)) == doctest::Approx(minkowski_norm(u)).epsilon(1e-11));
  }
}

TEST_CASE("successive z boosts compose by velocity addition") {
  const double v1 = 0.5, v2 = 0.3;
  const double v12 = (v1 + v2) / (1 + v1 * v2);
  const FourVector u{1.3, {0.4, -0.2, 0.9}};
  const FourVector two_steps = boost_z(BoostParameters(v2), boost_z(BoostParameters(v1), u));
  const FourVector one_step = boost_z(BoostParameters(v12), u);
  CHECK(two_steps.t == doctest::Approx(one_step.t).epsilon(1e-12));
  CHECK(two_steps.x.z == doctest::Approx(one_step.x.z).epsilon(1e-12));
}

TEST_CASE("plane wave phase is boost invariant when events and momenta share the map") {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 100; ++i) {
    const double v = std::uniform_real_distribution<double>(-0.9, 0.9)(rng);
    const BoostParameters b(v);
    const FourVector k = on_shell(1.0, random_vec(rng, 2));
    const FourVector x{std::uniform_real_distribution<double>(-5, 5)(rng), random_vec(rng, 5)};
    const double phase = k.t * x.t - dot(k.x, x.x);
    const FourVector kb = boost_z(b, k);
    const FourVector xb = boost_z(b, x);
    const double phase_b = kb.t * xb.t - dot(kb.x, xb.x);
    CHECK(phase_b == doctest::Approx(phase).epsilon(1e-10));
  }
}

TEST_CASE("rotation matrices are orthogonal and right handed") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const Vec3 axis = random_vec(rng, 1.0) + Vec3{0.1, 0.2, 0.3};
    const double angle = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const Mat3 r = rotation_about(axis, angle);
    const Mat3 rr = r * transpose(r);
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        CHECK(rr.at(row, col) == doctest::Approx(row == col ? 1.0 : 0.0).epsilon(1e-12));
      }
    }
    const Vec3 e1 = r * Vec3{1, 0, 0};
    const Vec3 e2 = r * Vec3{0, 1, 0};
    const Vec3 e3 = r * Vec3{0, 0, 1};
    CHECK(dot(cross(e1, e2), e3) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("quarter turn about z maps x to y") {
  const Mat3 r = rotation_about({0, 0, 1}, 1.5707963267948966);
  const Vec3 v = r * Vec3{1, 0, 0};
  CHECK(v.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(v.y == doctest::Approx(1.0));
  CHECK_THROWS_AS(rotation_about({0, 0, 0}, 1.0), DomainError);
}

TEST_CASE("spatial rotation leaves time and the interval alone") {
  const Mat3 r = rotation_about({1, 1, 0}, 0.7);
  const FourVector u{1.7, {0.3, -0.8, 0.2}};
  const FourVector v = rotate_spatial(r, u);
  CHECK(v.t == doctest::Approx(1.7));
  CHECK(minkowski_norm(v) == doctest::Approx(minkowski_norm(u)).epsilon(1e-12));
}
