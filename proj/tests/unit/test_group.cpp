#include "s3min/group.hpp"

#include "s3min/configuration.hpp"
#include "s3min/errors.hpp"
#include "s3min/membership.hpp"

#include <doctest.h>

using namespace s3min;

namespace {

const Configuration& cfg4() {
  static Configuration cfg = build_configuration(4);
  return cfg;
}

const FiniteGroup& group4() {
  static FiniteGroup g = symmetry_group(cfg4());
  return g;
}

}  // namespace

TEST_CASE("generation basics") {
  CHECK(FiniteGroup::generate({Isometry::identity()}, 8).size() == 1);
  CHECK_THROWS_AS(FiniteGroup::generate({Isometry::identity()}, 0), Error);
  Mat4 bad = Mat4::Identity() * 1.5;
  CHECK_THROWS_AS(Isometry::from_matrix(bad), NonOrthogonalGenerator);
}

TEST_CASE("group orders at N = 4") {
  const Configuration& cfg = cfg4();

  std::vector<Isometry> rgens;
  for (const auto& c : cfg.rcol) rgens.push_back(refl(c));
  FiniteGroup gr = FiniteGroup::generate(rgens, 256);
  CHECK(gr.size() == 48);
  CHECK(gr.verify_closure());

  std::vector<Isometry> lgens;
  for (const auto& c : cfg.scaf) lgens.push_back(refl(c));
  CHECK(FiniteGroup::generate(lgens, 256).size() == 32);  // 8N

  CHECK(group4().size() == 192);  // 48N

  CHECK_THROWS_AS(symmetry_group(cfg, 100), ClosureCapExceeded);
}

TEST_CASE("every element is unitary or antiunitary, unitary subset has index 2") {
  std::size_t unitary = 0;
  for (const auto& g : group4().elements()) {
    CHECK(g.kind() != IsometryKind::neither);
    if (g.kind() == IsometryKind::unitary) ++unitary;
  }
  CHECK(unitary * 2 == group4().size());
}

TEST_CASE("generation is deterministic") {
  FiniteGroup a = symmetry_group(cfg4());
  FiniteGroup b = symmetry_group(cfg4());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(mat_key(a.at(i).mat()) == mat_key(b.at(i).mat()));
}

TEST_CASE("closure under products and inverses") {
  const FiniteGroup& g = group4();
  Rng rng(101);
  for (int i = 0; i < 4000; ++i) {
    std::size_t a = rng.next_u64() % g.size();
    std::size_t b = rng.next_u64() % g.size();
    CHECK(g.contains(Mat4(g.at(a).mat() * g.at(b).mat())));
  }
  for (const auto& e : g.elements()) CHECK(g.contains(e.inverse()));
}

TEST_CASE("orbits and stabilizers") {
  const Configuration& cfg = cfg4();
  const FiniteGroup& g = group4();

  // prism orbit: half the 48N prisms
  auto prism_orbit = orbit_points(g, cfg.prisms[0].center);
  CHECK(prism_orbit.size() == 96);

  // a fixed object has a singleton orbit
  auto id_orbit = orbit_points(FiniteGroup::trivial(), cfg.prisms[0].center);
  CHECK(id_orbit.size() == 1);

  // the reflection subgroup through the twelve circles acts transitively on
  // the six solid tori
  std::vector<Isometry> rgens;
  for (const auto& c : cfg.rcol) rgens.push_back(refl(c));
  FiniteGroup gr = FiniteGroup::generate(rgens, 64);
  CHECK(orbit_circles(gr, cfg.acol[kC1]).size() == 6);

  // stabilizer of the solid torus around C1 has order 8N
  FiniteGroup stab = circle_stabilizer(g, cfg.acol[kC1]);
  CHECK(stab.size() == 32);

  // orbit-stabilizer consistency on several objects
  CHECK(orbit_circles(g, cfg.acol[kC1]).size() * stab.size() == g.size());
  for (int p : {0, 17, 101}) {
    auto orb = orbit_points(g, cfg.prisms[p].center);
    auto st = stabilizer(
        g, cfg.prisms[p].center,
        [](const Isometry& t, const S3Point& q) { return t.apply(q); },
        [](const S3Point& a, const S3Point& b) { return (a.vec() - b.vec()).norm() < 1e-8; });
    CHECK(orb.size() * st.size() == g.size());
    CHECK(st.size() == 2);
    // the nontrivial stabilizer element is the reflection through the axis
    bool found_axis_refl = false;
    for (const auto& e : st.elements())
      if ((e.mat() - refl(cfg.prisms[p].axis).mat()).cwiseAbs().maxCoeff() < 1e-9)
        found_axis_refl = true;
    CHECK(found_axis_refl);
  }

  // whole-sphere stabilizer is everything
  auto all = stabilizer(
      g, 0, [](const Isometry&, int) { return 0; }, [](int, int) { return true; });
  CHECK(all.size() == g.size());

  // adjoining the circle reflection between C1 and C2 regenerates the group
  std::vector<Isometry> regen = stab.elements();
  regen.push_back(refl(cfg.rcol[kG12]));
  CHECK(FiniteGroup::generate(regen, 512).size() == g.size());
}

TEST_CASE("kernel and image of the projection to O(3)") {
  const FiniteGroup& g = group4();
  KernelImage ki = hopf_kernel_image(g);
  CHECK(ki.kernel.size() == 4);
  CHECK(ki.image.size() == 48);
  for (const auto& r : ki.image) CHECK(preserves_cube(r));

  // kernel is the cyclic group of simultaneous fiber rotations
  Isometry gen = rot(circle_c1(), 2 * kPi / 4) * rot(circle_c1_perp(), 2 * kPi / 4);
  for (const auto& e : ki.kernel.elements()) {
    bool is_power = false;
    Mat4 p = Mat4::Identity();
    for (int k = 0; k < 4; ++k) {
      if ((e.mat() - p).cwiseAbs().maxCoeff() < 1e-9) is_power = true;
      p = gen.mat() * p;
    }
    CHECK(is_power);
  }

  CHECK(hopf_kernel_image(FiniteGroup::trivial()).kernel.size() == 1);
  CHECK(hopf_kernel_image(FiniteGroup::trivial()).image.size() == 1);
}

TEST_CASE("membership identities at N = 4") {
  MembershipReport rep = membership_checks(cfg4(), group4());
  CHECK(rep.turn_and_shift_in_group);
  CHECK(rep.isoclinic_scaf_in_group);
  CHECK(rep.axis_reflections_in_group);
  CHECK(rep.quadruple_identities_hold);
  CHECK(rep.triple_identities_hold);
  CHECK(rep.max_identity_error < 1e-10);
  CHECK(group4().contains(Isometry::identity()));
}

TEST_CASE("group action bijectivity on the labeled collections") {
  const Configuration& cfg = cfg4();
  std::vector<Isometry> gens = symmetry_generators(cfg);
  FiniteGroup gen_only = FiniteGroup::from_elements(
      [&] {
        std::vector<Isometry> v{Isometry::identity()};
        v.insert(v.end(), gens.begin(), gens.end());
        return v;
      }(),
      gens);

  auto apply_circle = [](const Isometry& t, const GreatCircle& c) { return t.apply(c); };
  auto eq_circle = [](const GreatCircle& a, const GreatCircle& b) { return a.same_circle(b); };
  CHECK_NOTHROW(group_action(gen_only, cfg.acol, apply_circle, eq_circle));
  CHECK_NOTHROW(group_action(gen_only, cfg.scaf, apply_circle, eq_circle));
  CHECK_NOTHROW(group_action(gen_only, cfg.rcol, apply_circle, eq_circle));

  // the permutation of the six circles respects the polar pairing, so the
  // three Clifford tori are permuted as well
  GroupAction act = group_action(gen_only, cfg.acol, apply_circle, eq_circle);
  for (const auto& perm : act.perms)
    for (int i = 0; i < 6; i += 2) {
      int a = perm[i], b = perm[i + 1];
      CHECK(a / 2 == b / 2);
    }

  // points and prism centers are permuted too
  std::vector<S3Point> all_points;
  for (const auto& pts : cfg.ptcol) all_points.insert(all_points.end(), pts.begin(), pts.end());
  auto apply_pt = [](const Isometry& t, const S3Point& p) { return t.apply(p); };
  auto eq_pt = [](const S3Point& a, const S3Point& b) {
    return (a.vec() - b.vec()).norm() < 1e-8;
  };
  CHECK_NOTHROW(group_action(gen_only, all_points, apply_pt, eq_pt));

  std::vector<S3Point> centers;
  for (const auto& p : cfg.prisms) centers.push_back(p.center);
  CHECK_NOTHROW(group_action(gen_only, centers, apply_pt, eq_pt));
}
