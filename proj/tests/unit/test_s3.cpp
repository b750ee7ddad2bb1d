#include "s3min/s3.hpp"

#include "s3min/configuration.hpp"
#include "s3min/errors.hpp"

#include <doctest.h>

using namespace s3min;

namespace {

GreatCircle random_circle(Rng& rng) {
  Vec4 u = rng.next_s3();
  Vec4 w = rng.next_s3();
  w -= u.dot(w) * u;
  while (w.norm() < 1e-3) {
    w = rng.next_s3();
    w -= u.dot(w) * u;
  }
  return GreatCircle(u, Vec4(w.normalized()));
}

}  // namespace

TEST_CASE("points and basic invariants") {
  CHECK_THROWS_AS(S3Point(Vec4(1, 1, 0, 0)), InvalidPoint);
  CHECK_NOTHROW(S3Point(Vec4(0.5, 0.5, 0.5, 0.5)));
  S3Point p = S3Point::normalized(Vec4(3, 0, 4, 0));
  CHECK(p.vec().norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(S2Point(Vec3(1, 0, 0)), InvalidPoint);
}

TEST_CASE("hopf projection fixed values") {
  // fiber over the north pole
  S2Point n = hopf_project(S3Point(Complex(1, 0), Complex(0, 0)));
  CHECK(n[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(n[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(n[2] == doctest::Approx(0.5).epsilon(1e-15));

  double h = 1.0 / std::sqrt(2.0);
  S2Point c2 = hopf_project(S3Point(h, Complex(0, h)));
  CHECK(c2[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(c2[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(c2[2] == doctest::Approx(0.0).epsilon(1e-15));

  // points of the circle through (cos pi/8, sin pi/8): a single image point
  double r8 = std::sqrt(2.0) / 4.0;
  for (double s : {0.0, 0.3, 1.7, 4.0}) {
    Complex phase = std::polar(1.0, s);
    Vec3 img = hopf_project(from_c2(phase * std::cos(kPi / 8), phase * std::sin(kPi / 8)));
    CHECK((img - Vec3(r8, 0, r8)).norm() < 1e-15);
  }
}

TEST_CASE("hopf image norm is 1/2 everywhere") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Vec3 y = hopf_project(rng.next_s3());
    CHECK(std::abs(y.norm() - 0.5) < 1e-14);
  }
}

TEST_CASE("rotations about C1 act by a phase on w2") {
  GreatCircle c1 = circle_c1();
  Rng rng(11);
  for (double s : {0.0, 0.4, kPi / 2, 2.9}) {
    Isometry r = rot(c1, s);
    for (int i = 0; i < 20; ++i) {
      Vec4 x = rng.next_s3();
      auto [w1, w2] = to_c2(x);
      Vec4 expected = from_c2(w1, std::polar(1.0, s) * w2);
      CHECK((r.apply(x) - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  Isometry rp = rot(circle_c1_perp(), 0.7);
  Vec4 x = rng.next_s3();
  auto [w1, w2] = to_c2(x);
  CHECK((rp.apply(x) - from_c2(std::polar(1.0, 0.7) * w1, w2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("rotation group law and orthogonality") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    GreatCircle c = random_circle(rng);
    double t1 = rng.uniform(-3, 3), t2 = rng.uniform(-3, 3);
    Mat4 lhs = (rot(c, t1) * rot(c, t2)).mat();
    Mat4 rhs = rot(c, t1 + t2).mat();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < kMatTol);
    Mat4 m = rot(c, t1).mat();
    CHECK((m.transpose() * m - Mat4::Identity()).cwiseAbs().maxCoeff() < kMatTol);
    CHECK((rot(c, 0.0).mat() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((rot(c, kPi).mat() - refl(c).mat()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("rot fixes the circle and moves the polar circle by t") {
  Rng rng(5);
  for (int i = 0; i < 6; ++i) {
    GreatCircle c = random_circle(rng);
    double t = rng.uniform(0.1, kPi - 0.1);
    Isometry r = rot(c, t);
    for (int k = 0; k < 8; ++k) {
      Vec4 p = c.point(rng.uniform(0, 2 * kPi));
      CHECK((r.apply(p) - p).norm() < 1e-13);
      Vec4 q = c.perp().point(rng.uniform(0, 2 * kPi));
      double moved = std::acos(std::clamp(q.dot(r.apply(q)), -1.0, 1.0));
      CHECK(moved == doctest::Approx(t).epsilon(1e-10));
    }
  }
}

TEST_CASE("reflections: involution, fixed sets, explicit matrices") {
  Rng rng(9);
  GreatCircle c = random_circle(rng);
  Isometry r = refl(c);
  CHECK((r.mat() * r.mat() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  for (int k = 0; k < 8; ++k) {
    double s = rng.uniform(0, 2 * kPi);
    CHECK((r.apply(Vec4(c.point(s))) - c.point(s)).norm() < 1e-13);
    // the polar circle is preserved setwise (antipodally), not pointwise
    Vec4 q = c.perp().point(s);
    CHECK((r.apply(q) + q).norm() < 1e-13);
  }
  for (int i = 0; i < 10; ++i) {
    GreatCircle other = random_circle(rng);
    bool fixed_setwise = other.same_circle(r.apply(other));
    bool is_c_or_perp = other.same_circle(c) || other.same_circle(c.perp());
    CHECK(fixed_setwise == is_c_or_perp);
  }

  Configuration cfg = build_configuration(4);
  double h = 1.0 / std::sqrt(2.0);
  Mat4 g12 = complex_linear(h, Complex(0, -h), Complex(0, h), -h);
  CHECK((refl(cfg.rcol[kG12]).mat() - g12).cwiseAbs().maxCoeff() < 1e-13);

  // refl through the circle between C2 and C3 swaps and twists the factors
  Isometry g23 = refl(cfg.rcol[kG23]);
  Vec4 x = rng.next_s3();
  auto [w1, w2] = to_c2(x);
  Vec4 expected = from_c2(std::polar(1.0, -kPi / 4) * w2, std::polar(1.0, kPi / 4) * w1);
  CHECK((g23.apply(x) - expected).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("distance to circles") {
  GreatCircle c1 = circle_c1();
  for (double r : {0.0, 0.3, kPi / 8, kPi / 2}) {
    Vec4 p = toroidal_point(r, 0.9, -1.3);
    CHECK(dist_to_circle(c1, p) == doctest::Approx(r).epsilon(1e-12));
  }
  Rng rng(13);
  GreatCircle c = random_circle(rng);
  for (int k = 0; k < 12; ++k)
    CHECK(dist_to_circle(c, Vec4(c.perp().point(rng.uniform(0, 7)))) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));
  Configuration cfg = build_configuration(4);
  CHECK(dist_to_circle(c1, Vec4(cfg.rcol[kG12].point(0.4))) ==
        doctest::Approx(kPi / 8).epsilon(1e-12));
}

TEST_CASE("perp circle is at constant distance pi/2") {
  Rng rng(17);
  for (int i = 0; i < 5; ++i) {
    GreatCircle c = random_circle(rng);
    GreatCircle p = c.perp();
    for (int k = 0; k < 16; ++k)
      CHECK(std::abs(dist_to_circle(c, Vec4(p.point(2 * kPi * k / 16.0))) - kPi / 2) < 1e-12);
  }
}

TEST_CASE("unitary / antiunitary classification") {
  CHECK(rot(circle_c1(), 0.37).kind() == IsometryKind::unitary);
  CHECK(refl(circle_c00()).kind() == IsometryKind::antiunitary);
  Configuration cfg = build_configuration(4);
  for (const auto& circ : cfg.rcol) CHECK(refl(circ).kind() == IsometryKind::unitary);
  for (const auto& circ : cfg.scaf) CHECK(refl(circ).kind() == IsometryKind::antiunitary);
  // a generic reflection is neither
  Rng rng(23);
  int neither = 0;
  for (int i = 0; i < 10; ++i)
    if (refl(random_circle(rng)).kind() == IsometryKind::neither) ++neither;
  CHECK(neither > 5);
}

TEST_CASE("projection to O(3): conjugation identity and homomorphism") {
  Rng rng(29);
  CHECK((project_o3(Isometry::identity()) - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  // fiber rotations project to the identity
  for (double t : {0.3, 1.1, 2.9}) {
    Mat3 r = project_o3(rot(circle_c1(), t) * rot(circle_c1_perp(), t));
    CHECK((r - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  }

  Configuration cfg = build_configuration(4);
  std::vector<Isometry> gens = symmetry_generators(cfg);
  for (const auto& g : gens) {
    Mat3 r = project_o3(g);
    CHECK((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    for (int k = 0; k < 100; ++k) {
      Vec4 x = rng.next_s3();
      CHECK((hopf_project(Vec4(g.apply(x))) - r * hopf_project(x)).norm() < 1e-10);
    }
  }

  // the projected reflection through a fiber circle fixes its image point
  Mat3 r12 = project_o3(refl(cfg.rcol[kG12]));
  Vec3 axis(0, -1, 1);
  CHECK((r12 * axis - axis).norm() < 1e-12);
  CHECK(r12.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(project_o3(refl(circle_c00())).determinant() == doctest::Approx(-1.0).epsilon(1e-12));

  for (int i = 0; i < 20; ++i) {
    Isometry s = (i % 2) ? random_unitary(rng) : random_antiunitary(rng);
    Isometry t = (i % 3) ? random_unitary(rng) : random_antiunitary(rng);
    Mat3 lhs = project_o3(s * t);
    Mat3 rhs = project_o3(s) * project_o3(t);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
  }

  Rng rng2(31);
  GreatCircle generic = random_circle(rng2);
  while (refl(generic).kind() != IsometryKind::neither) generic = random_circle(rng2);
  CHECK_THROWS_AS(project_o3(refl(generic)), NonFiberPreservingElement);
}

TEST_CASE("toroidal chart round trip") {
  for (double r : {0.01, 0.3, kPi / 8})
    for (double theta : {-1.2, 0.0, 0.7})
      for (double z : {-1.0, 0.2, 2.9}) {
        ToroidalCoords c = toroidal_coords(toroidal_point(r, theta, z));
        CHECK(c.r == doctest::Approx(r).epsilon(1e-12));
        CHECK(wrap_angle(c.theta - theta) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(wrap_angle(c.z - z) == doctest::Approx(0.0).epsilon(1e-12));
      }
}
