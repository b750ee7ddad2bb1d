#include "s3min/prism.hpp"

#include "s3min/errors.hpp"

#include <doctest.h>

using namespace s3min;

namespace {

const StandardPrism& prism_m0() {
  static StandardPrism p(kPi / 8, kPi / 2, kPi / 4);  // three-tori generator at N = 4
  return p;
}

const StandardPrism& prism_cs() {
  static StandardPrism p(kPi / 4, kPi / 2, kPi / 4);  // boundary case S = pi/4, Z = Theta/2
  return p;
}

double rand_in(Rng& rng, double lo, double hi) { return rng.uniform(lo, hi); }

}  // namespace

TEST_CASE("killing field: tangency and orbit consistency") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Vec4 x = rng.next_s3();
    Vec4 k = killing(x);
    CHECK(std::abs(k.dot(x)) < 1e-14);
    CHECK(std::abs(killing_orbit(x, 1.7).norm() - 1.0) < 1e-14);
    double h = 1e-6;
    Vec4 fd = (killing_orbit(x, h) - killing_orbit(x, -h)) / (2 * h);
    CHECK((fd - k).norm() < 1e-9);
  }
  // the orbit field is the derivative of the rotations along C00
  for (double t : {0.3, 1.2}) {
    Isometry r = rot(circle_c00_perp(), t);
    Vec4 x = rng.next_s3();
    CHECK((r.apply(x) - killing_orbit(x, t)).norm() < 1e-13);
  }
}

TEST_CASE("face parametrizations land on their carriers") {
  Rng rng(43);
  for (const StandardPrism* p : {&prism_m0(), &prism_cs()}) {
    for (int i = 0; i < 500; ++i) {
      for (FaceTag face : {FaceTag::Tm, FaceTag::Tp, FaceTag::P, FaceTag::Rm, FaceTag::Rp}) {
        auto range = p->face_param_range(face);
        double a = rand_in(rng, range[0], range[1]);
        double b = rand_in(rng, range[2], range[3]);
        Vec4 x = p->face_point(face, a, b);
        CHECK(std::abs(x.norm() - 1.0) < 1e-12);
        ToroidalCoords c = toroidal_coords(x);
        switch (face) {
          case FaceTag::Tm:
            CHECK(std::abs(c.z + p->Z() / 2) < 1e-12);  // on the great sphere at -Z/2
            break;
          case FaceTag::Tp:
            CHECK(std::abs(c.z - p->Z() / 2) < 1e-12);
            break;
          case FaceTag::P:
            CHECK(std::abs(c.r - p->S()) < 1e-12);  // on the tube boundary
            break;
          case FaceTag::Rm:
            CHECK(std::abs(c.theta + p->Theta() / 2) < 1e-12);  // on a Clifford torus
            break;
          case FaceTag::Rp:
            CHECK(std::abs(c.theta - p->Theta() / 2) < 1e-12);
            break;
        }
      }
    }
  }
}

TEST_CASE("closed-form normals: unit, tangent, orthogonal to the face") {
  Rng rng(47);
  for (const StandardPrism* p : {&prism_m0(), &prism_cs()}) {
    for (int i = 0; i < 300; ++i) {
      for (FaceTag face : {FaceTag::Tm, FaceTag::Tp, FaceTag::P, FaceTag::Rm, FaceTag::Rp}) {
        auto range = p->face_param_range(face);
        double a = rand_in(rng, range[0] + 1e-3, range[1] - 1e-3);
        double b = rand_in(rng, range[2] + 1e-3, range[3] - 1e-3);
        Vec4 x = p->face_point(face, a, b);
        Vec4 nu = p->face_normal_closed(face, a, b);
        auto [da, db] = p->face_partials(face, a, b);
        CHECK(std::abs(nu.norm() - 1.0) < 1e-12);
        CHECK(std::abs(nu.dot(x)) < 1e-12);
        CHECK(std::abs(nu.dot(da)) < 1e-12);
        CHECK(std::abs(nu.dot(db)) < 1e-12);
      }
    }
  }
}

TEST_CASE("numeric outward normal matches the closed form") {
  // fixed values first
  const StandardPrism& p = prism_m0();
  Vec4 nu_tp = p.face_normal_closed(FaceTag::Tp, 0.05, 0.3);
  Vec4 expect_tp(-std::sin(p.Z() / 2), std::cos(p.Z() / 2), 0, 0);
  CHECK((nu_tp - expect_tp).norm() < 1e-14);
  Vec4 nu_p = p.face_normal_closed(FaceTag::P, 0.0, 0.0);
  Vec4 expect_p(-std::sin(p.S()), 0, std::cos(p.S()), 0);
  CHECK((nu_p - expect_p).norm() < 1e-14);

  Rng rng(53);
  for (const StandardPrism* pr : {&prism_m0(), &prism_cs()}) {
    for (int i = 0; i < 400; ++i) {
      for (FaceTag face : {FaceTag::Tm, FaceTag::Tp, FaceTag::P, FaceTag::Rm, FaceTag::Rp}) {
        auto range = pr->face_param_range(face);
        // keep r strictly positive on the triangles: the frame degenerates at
        // the apex
        double lo_a = (face == FaceTag::Tm || face == FaceTag::Tp) ? 1e-3 : range[0];
        double a = rand_in(rng, lo_a, range[1]);
        double b = rand_in(rng, range[2], range[3]);
        Vec4 numeric = pr->face_normal(face, a, b);
        Vec4 closed = pr->face_normal_closed(face, a, b);
        CHECK((numeric - closed).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("K . nu matches the closed forms through the numeric route") {
  Rng rng(59);
  for (const StandardPrism* pr : {&prism_m0(), &prism_cs()}) {
    double worst = 0;
    for (int i = 0; i < 2000; ++i) {
      for (FaceTag face : {FaceTag::Tm, FaceTag::Tp, FaceTag::P, FaceTag::Rm, FaceTag::Rp}) {
        auto range = pr->face_param_range(face);
        double lo_a = (face == FaceTag::Tm || face == FaceTag::Tp) ? 1e-3 : range[0];
        double a = rand_in(rng, lo_a, range[1]);
        double b = rand_in(rng, range[2], range[3]);
        Vec4 x = pr->face_point(face, a, b);
        double numeric = killing(x).dot(pr->face_normal(face, a, b));
        double closed = pr->k_dot_normal_closed(face, a, b);
        worst = std::max(worst, std::abs(numeric - closed));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("sign structure of K . nu on each face") {
  Rng rng(61);
  const StandardPrism& p = prism_m0();
  for (int i = 0; i < 2000; ++i) {
    // triangles: nonnegative, zero iff r = 0
    double r = rand_in(rng, 0, p.S()), phase = rand_in(rng, -p.Theta() / 2, p.Theta() / 2);
    CHECK(p.k_dot_normal_closed(FaceTag::Tp, r, phase) >= 0);
    if (r > 1e-3) CHECK(p.k_dot_normal_closed(FaceTag::Tm, r, phase) > 0);
    // parallelogram: strictly positive
    CHECK(p.k_dot_normal_closed(FaceTag::P, rand_in(rng, -p.Theta() / 2, p.Theta() / 2),
                                rand_in(rng, -p.Z() / 2, p.Z() / 2)) > 0);
    // rectangles: strictly negative away from the boundary equality case
    CHECK(p.k_dot_normal_closed(FaceTag::Rp, rand_in(rng, 0, p.S()),
                                rand_in(rng, -p.Z() / 2, p.Z() / 2)) < 0);
    CHECK(p.k_dot_normal_closed(FaceTag::Rm, rand_in(rng, 0, p.S()),
                                rand_in(rng, -p.Z() / 2, p.Z() / 2)) < 0);
  }
  CHECK(p.k_dot_normal_closed(FaceTag::Tp, 0.0, 0.1) == doctest::Approx(0.0));
  // equality locus of the rectangles appears only in the boundary case
  const StandardPrism& cs = prism_cs();
  CHECK(std::abs(cs.k_dot_normal_closed(FaceTag::Rp, cs.S(), -cs.Z() / 2)) < 1e-15);
  CHECK(std::abs(cs.k_dot_normal_closed(FaceTag::Rm, cs.S(), cs.Z() / 2)) < 1e-15);
}

TEST_CASE("boundary classification matches the orbit proposition") {
  for (const StandardPrism* pr : {&prism_m0(), &prism_cs()}) {
    Rng rng(67);
    const double tol = 1e-9;
    for (int i = 0; i < 2000; ++i) {
      for (FaceTag face : {FaceTag::Tm, FaceTag::Tp, FaceTag::P, FaceTag::Rm, FaceTag::Rp}) {
        auto range = pr->face_param_range(face);
        double lo_a = (face == FaceTag::Tm || face == FaceTag::Tp) ? 1e-6 : range[0];
        double a = rand_in(rng, lo_a, range[1]);
        double b = rand_in(rng, range[2], range[3]);
        Vec4 x = pr->face_point(face, a, b);
        BoundaryClassification got = classify_boundary_point(*pr, x);

        // expectations straight from face membership
        ToroidalCoords c = toroidal_coords(x);
        bool on_r = c.r < tol || std::abs(std::abs(c.theta) - pr->Theta() / 2) < tol;
        bool on_tpt = std::abs(std::abs(c.z) - pr->Z() / 2) < tol ||
                      std::abs(c.r - pr->S()) < tol;
        CHECK(got.exit_k == on_tpt);
        CHECK(got.entry_k == (on_r && !on_tpt));
        CHECK(got.exit_mk == on_r);
        CHECK(got.entry_mk == (on_tpt && !on_r));
      }
    }
  }
}

TEST_CASE("classification at the distinguished points") {
  const StandardPrism& p = prism_m0();

  // interior of the parallelogram: exit for K, entry for -K
  auto pc = classify_boundary_point(p, FaceTag::P, 0.2, 0.05);
  CHECK(pc.exit_k);
  CHECK(pc.entry_mk);
  CHECK_FALSE(pc.entry_k);
  CHECK_FALSE(pc.exit_mk);

  // interior of a triangle with r > 0: exit for K
  auto tc = classify_boundary_point(p, FaceTag::Tp, 0.2, 0.1);
  CHECK(tc.exit_k);
  CHECK(tc.entry_mk);

  // interior of a rectangle: entry for K, exit for -K
  auto rc = classify_boundary_point(p, FaceTag::Rp, 0.2, 0.1);
  CHECK(rc.entry_k);
  CHECK(rc.exit_mk);
  CHECK_FALSE(rc.exit_k);

  // hexagon edge point: exit for both directions
  auto hex = classify_boundary_point(p, Vec4(p.hexagon_edge_point(0, 0.5)));
  CHECK(hex.exit_k);
  CHECK(hex.exit_mk);
  CHECK_FALSE(hex.entry_k);
  CHECK_FALSE(hex.entry_mk);

  // apex on C1: tangential, exit for both
  auto apex = classify_boundary_point(p, Vec4(toroidal_point(0, 0, p.Z() / 2)));
  CHECK(apex.tangential);
  CHECK(apex.exit_k);
  CHECK(apex.exit_mk);
  CHECK_FALSE(apex.entry_k);
  CHECK_FALSE(apex.entry_mk);

  // the corner points R cap T cap P of the boundary-case prism
  const StandardPrism& cs = prism_cs();
  double t4 = cs.Theta() / 4, rt = 1 / std::sqrt(2.0);
  Vec4 corner(rt * std::cos(t4), -rt * std::sin(t4), rt * std::cos(t4), rt * std::sin(t4));
  auto cc = classify_boundary_point(cs, corner);
  CHECK(cc.tangential);
  CHECK(cc.exit_k);
  CHECK(cc.exit_mk);
  CHECK_FALSE(cc.entry_k);
  CHECK_FALSE(cc.entry_mk);

  // hypothesis Z <= Theta/2 is enforced
  StandardPrism bad(kPi / 8, kPi / 3, kPi / 4);
  CHECK_THROWS_AS(classify_boundary_point(bad, FaceTag::P, 0.1, 0.1), HypothesisViolated);
}

TEST_CASE("orbit components in the prism") {
  const StandardPrism& p = prism_m0();

  // a hexagon boundary point: the orbit meets the prism exactly once
  Vec4 hex = p.hexagon_edge_point(1, 0.37);
  OrbitIntersections oi = orbit_prism_intersections(p, hex);
  CHECK(oi.components == 1);

  auto vertices = p.hexagon_vertices();
  for (const auto& v : vertices) {
    OrbitIntersections ov = orbit_prism_intersections(p, v);
    CHECK(ov.components == 1);
  }

  // the center: one component containing t = 0
  Vec4 center = toroidal_point(p.S() / 2, 0, 0);
  OrbitIntersections oc = orbit_prism_intersections(p, center);
  CHECK(oc.components >= 1);
  bool covers_zero = false;
  for (auto [a, b] : oc.intervals) {
    if (a > b) covers_zero = true;  // wrapping interval
    if (a <= 1e-9 || b >= 2 * kPi - 1e-9) covers_zero = true;
    if (a <= 0.0 && 0.0 <= b) covers_zero = true;
  }
  CHECK(covers_zero);

  // an interior triangle point: single component, exiting through the
  // triangle/parallelogram side
  Vec4 tp = p.face_point(FaceTag::Tp, 0.05, 0.1);
  OrbitIntersections ot = orbit_prism_intersections(p, tp);
  CHECK(ot.components == 1);
  for (auto [a, b] : ot.intervals) {
    Vec4 exit_pt = killing_orbit(tp, b);
    ToroidalCoords c = toroidal_coords(exit_pt);
    bool on_exit_faces = std::abs(std::abs(c.z) - p.Z() / 2) < 1e-6 ||
                         std::abs(c.r - p.S()) < 1e-6;
    CHECK(on_exit_faces);
  }

  // a far point whose orbit misses the prism entirely
  OrbitIntersections off = orbit_prism_intersections(p, Vec4(0, 0, 1, 0));
  CHECK(off.components == 0);
}

TEST_CASE("hexagon corner angles and the Gauss-Bonnet target") {
  const StandardPrism& p = prism_m0();
  // apexes at angle Theta, the four parallelogram-side corners right
  CHECK(p.corner_interior_angle(0) == doctest::Approx(p.Theta()).epsilon(1e-12));
  CHECK(p.corner_interior_angle(3) == doctest::Approx(p.Theta()).epsilon(1e-12));
  for (int k : {1, 2, 4, 5})
    CHECK(p.corner_interior_angle(k) == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(p.expected_total_curvature() == doctest::Approx(2 * p.Theta() - 2 * kPi).epsilon(1e-12));

  // a smaller apex angle changes the target accordingly
  StandardPrism narrow(kPi / 8, kPi / 3, kPi / 8);
  CHECK(narrow.expected_total_curvature() ==
        doctest::Approx(2 * kPi / 3 - 2 * kPi).epsilon(1e-12));
}

TEST_CASE("parallelogram vertex angles are pi/2 +- S") {
  for (const StandardPrism* pr : {&prism_m0(), &prism_cs()}) {
    auto corner_angle = [&](double sign_a, double sign_b) {
      auto [da, db] = pr->face_partials(FaceTag::P, sign_a * pr->Theta() / 2,
                                        sign_b * pr->Z() / 2);
      Vec4 ta = -sign_a * da.normalized(), tb = -sign_b * db.normalized();
      return std::acos(std::clamp(ta.dot(tb), -1.0, 1.0));
    };
    // opposite corners share an angle; adjacent ones are supplementary-ish
    CHECK(corner_angle(1, 1) == doctest::Approx(kPi / 2 - pr->S()).epsilon(1e-12));
    CHECK(corner_angle(-1, -1) == doctest::Approx(kPi / 2 - pr->S()).epsilon(1e-12));
    CHECK(corner_angle(1, -1) == doctest::Approx(kPi / 2 + pr->S()).epsilon(1e-12));
    CHECK(corner_angle(-1, 1) == doctest::Approx(kPi / 2 + pr->S()).epsilon(1e-12));
  }
}
