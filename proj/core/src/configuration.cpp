#include "s3min/configuration.hpp"

#include "s3min/errors.hpp"

#include <algorithm>
#include <cmath>

namespace s3min {

namespace {

const double kSqrtHalf = 1.0 / std::sqrt(2.0);

std::vector<GreatCircle> make_acol() {
  std::vector<GreatCircle> acol;
  acol.push_back(circle_c1());
  acol.push_back(circle_c1_perp());
  acol.push_back(GreatCircle::fiber(kSqrtHalf, Complex(0, kSqrtHalf)));    // C2
  acol.push_back(GreatCircle::fiber(kSqrtHalf, Complex(0, -kSqrtHalf)));   // C2 perp
  acol.push_back(GreatCircle::fiber(kSqrtHalf, kSqrtHalf));                // C3
  acol.push_back(GreatCircle::fiber(kSqrtHalf, -kSqrtHalf));               // C3 perp
  return acol;
}

std::vector<GreatCircle> make_rcol() {
  const double c = std::cos(kPi / 8), s = std::sin(kPi / 8);
  const Complex i(0, 1);
  std::vector<GreatCircle> rcol;
  rcol.reserve(12);
  rcol.push_back(GreatCircle::fiber(c, i * s));                      // G12
  rcol.push_back(GreatCircle::fiber(c, s));                          // G13
  rcol.push_back(GreatCircle::fiber(c, -i * s));                     // G12p
  rcol.push_back(GreatCircle::fiber(c, -s));                         // G13p
  rcol.push_back(GreatCircle::fiber(s, i * c));                      // G1p2
  rcol.push_back(GreatCircle::fiber(s, c));                          // G1p3
  rcol.push_back(GreatCircle::fiber(s, -i * c));                     // G1p2p
  rcol.push_back(GreatCircle::fiber(s, -c));                         // G1p3p
  rcol.push_back(GreatCircle::fiber(kSqrtHalf, std::polar(kSqrtHalf, kPi / 4)));        // G23
  rcol.push_back(GreatCircle::fiber(kSqrtHalf, std::polar(kSqrtHalf, 3 * kPi / 4)));    // G23p
  rcol.push_back(GreatCircle::fiber(kSqrtHalf, std::polar(kSqrtHalf, -kPi / 4)));       // G2p3
  rcol.push_back(GreatCircle::fiber(kSqrtHalf, std::polar(kSqrtHalf, 5 * kPi / 4)));    // G2p3p
  return rcol;
}

GreatCircle scaf_circle(int torus, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  switch (torus) {
    case 1:  // on T2: {e^{i alpha}(cos r, sin r)}
      return GreatCircle(Vec4(c, s, 0, 0), Vec4(0, 0, c, s));
    case 2:  // on T3: {e^{i alpha}(cos r, i sin r)}
      return GreatCircle(Vec4(c, s, 0, 0), Vec4(0, 0, -s, c));
    case 0:  // on T1: {e^{i alpha}(e^{is}, e^{-is})/sqrt 2}
      return GreatCircle(kSqrtHalf * Vec4(c, s, c, s), kSqrtHalf * Vec4(-s, c, s, -c));
    default:
      throw Error("bad torus index");
  }
}

void locate_edge_circle(const Configuration& cfg, PrismEdgeRecord& edge,
                        const std::array<Vec4, 3>& samples) {
  auto on_circle = [&](const GreatCircle& circ) {
    for (const Vec4& p : samples)
      if (dist_to_circle(circ, p) > 1e-9) return false;
    return true;
  };
  for (std::size_t i = 0; i < cfg.scaf.size(); ++i)
    if (on_circle(cfg.scaf[i])) {
      edge.circle = {CircleSet::scaf, static_cast<int>(i)};
      return;
    }
  for (std::size_t i = 0; i < cfg.rcol.size(); ++i)
    if (on_circle(cfg.rcol[i])) {
      edge.circle = {CircleSet::rcol, static_cast<int>(i)};
      return;
    }
  throw Error("prism edge does not lie on a scaffolding or intersection circle");
}

}  // namespace

const GreatCircle& Configuration::circle(CircleRef ref) const {
  switch (ref.set) {
    case CircleSet::acol:
      return acol.at(ref.index);
    case CircleSet::rcol:
      return rcol.at(ref.index);
    case CircleSet::scaf:
      return scaf.at(ref.index);
  }
  throw Error("bad circle ref");
}

int Configuration::prism_index(int axis_circle, int j, int l) const {
  int jj = ((j % (2 * N)) + 2 * N) % (2 * N);
  int ll = ((l % 4) + 4) % 4;
  return (axis_circle * 2 * N + jj) * 4 + ll;
}

int Configuration::find_prism_by_center(const Vec4& x, double tol) const {
  for (std::size_t i = 0; i < prisms.size(); ++i) {
    const Vec4& c = prisms[i].center.vec();
    if (std::abs(c[0] - x[0]) > tol) continue;
    if ((c - x).norm() < tol) return static_cast<int>(i);
  }
  return -1;
}

Configuration build_configuration(int N) {
  if (N < 2 || N % 2 != 0)
    throw InvalidN("N must be even and positive (divisible by 4 for the full build)");
  Configuration cfg;
  cfg.N = N;
  cfg.full = (N % 4 == 0);
  cfg.tori = {Torus{kC1, kC1p}, Torus{kC2, kC2p}, Torus{kC3, kC3p}};
  cfg.acol = make_acol();
  cfg.rcol = make_rcol();

  for (int j = 0; j < N; ++j) {
    cfg.scaf.push_back(scaf_circle(1, j * kPi / N));
    cfg.scaf_torus.push_back(1);
  }
  for (int j = 0; j < N; ++j) {
    cfg.scaf.push_back(scaf_circle(2, j * kPi / N));
    cfg.scaf_torus.push_back(2);
  }
  if (cfg.full) {
    for (int j = 0; j < N; ++j) {
      cfg.scaf.push_back(scaf_circle(0, j * kPi / N));
      cfg.scaf_torus.push_back(0);
    }
  }

  cfg.ptcol.resize(6);
  for (int c = 0; c < 6; ++c)
    for (int j = 0; j < 2 * N; ++j) cfg.ptcol[c].emplace_back(cfg.acol[c].point(j * kPi / N));

  if (!cfg.full) return cfg;

  const double S = cfg.S(), Theta = cfg.Theta(), Z = cfg.Z();
  const GreatCircle c1 = circle_c1(), c1p = circle_c1_perp(), c00 = circle_c00();
  const S3Point std_center(toroidal_point(S / 2, 0, 0));

  // Placements of the six solid tori: the identity for T_{C1}, then the
  // reflections exchanging T_{C1} with each of the other five.
  std::array<Isometry, 6> axis_map = {
      Isometry::identity(),
      refl(cfg.rcol[kG1p3]) * refl(cfg.rcol[kG13]),
      refl(cfg.rcol[kG12]),
      refl(cfg.rcol[kG12p]),
      refl(cfg.rcol[kG13]),
      refl(cfg.rcol[kG13p]),
  };

  struct StdEdge {
    double a[3], b[3];  // (r, theta, z) endpoints
  };
  const std::array<StdEdge, 6> std_edges = {{
      {{0, Theta / 2, Z / 2}, {S, Theta / 2, Z / 2}},      // R+ cap T+
      {{S, Theta / 2, Z / 2}, {S, Theta / 2, -Z / 2}},     // P cap R+
      {{S, Theta / 2, -Z / 2}, {0, Theta / 2, -Z / 2}},    // R+ cap T-
      {{0, -Theta / 2, -Z / 2}, {S, -Theta / 2, -Z / 2}},  // R- cap T-
      {{S, -Theta / 2, -Z / 2}, {S, -Theta / 2, Z / 2}},   // P cap R-
      {{S, -Theta / 2, Z / 2}, {0, -Theta / 2, Z / 2}},    // R- cap T+
  }};

  cfg.prisms.reserve(48 * N);
  for (int c = 0; c < 6; ++c) {
    for (int j = 0; j < 2 * N; ++j) {
      for (int l = 0; l < 4; ++l) {
        const double theta0 = kPi * (2 * l + 1) / 4;
        const double z0 = kPi * (2 * j + 1) / (2 * N);
        // (r, theta, z) -> (r, theta + theta0, z + z0): the z-shift moves
        // both complex phases, the theta-shift only the second.
        Isometry placement = axis_map[c] * (rot(c1p, z0) * rot(c1, z0 + theta0));
        Prism prism{c, j, l, placement, placement.apply(c00), placement.apply(std_center),
                    {}, {}};

        for (int e = 0; e < 6; ++e) {
          const auto& se = std_edges[e];
          Vec4 a = placement.apply(Vec4(toroidal_point(se.a[0], se.a[1], se.a[2])));
          Vec4 b = placement.apply(Vec4(toroidal_point(se.b[0], se.b[1], se.b[2])));
          Vec4 m = placement.apply(Vec4(toroidal_point(0.5 * (se.a[0] + se.b[0]),
                                                       0.5 * (se.a[1] + se.b[1]),
                                                       0.5 * (se.a[2] + se.b[2]))));
          PrismEdgeRecord rec;
          rec.endpoints[0] = a;
          rec.endpoints[1] = b;
          rec.midpoint = m;
          locate_edge_circle(cfg, rec, {a, m, b});
          prism.edges[e] = rec;
        }

        auto torus_of = [&](const Vec4& p) {
          for (int t = 0; t < 3; ++t)
            if (std::abs(dist_to_circle(cfg.acol[cfg.tori[t].axis_a], p) - kPi / 4) < 1e-9)
              return t;
          throw Error("prism rectangle face is not on a Clifford torus");
        };
        Vec4 rm = placement.apply(Vec4(toroidal_point(S / 2, -Theta / 2, 0)));
        Vec4 rp = placement.apply(Vec4(toroidal_point(S / 2, Theta / 2, 0)));
        prism.faces[0] = {FaceTag::Rm, FaceCarrier::clifford_torus, torus_of(rm), -1};
        prism.faces[1] = {FaceTag::Rp, FaceCarrier::clifford_torus, torus_of(rp), -1};
        prism.faces[2] = {FaceTag::Tm, FaceCarrier::spherical_cap, c, j % (2 * N)};
        prism.faces[3] = {FaceTag::Tp, FaceCarrier::spherical_cap, c, (j + 1) % (2 * N)};
        prism.faces[4] = {FaceTag::P, FaceCarrier::cap_torus_boundary, c, -1};

        cfg.prisms.push_back(std::move(prism));
      }
    }
  }

  // Glue edge instances into shared edges, grouped per carrying circle and
  // merged by angular position along it.
  struct Instance {
    double angle;
    int prism, local;
  };
  std::map<CircleRef, std::vector<Instance>> per_circle;
  for (std::size_t p = 0; p < cfg.prisms.size(); ++p)
    for (int e = 0; e < 6; ++e) {
      const auto& rec = cfg.prisms[p].edges[e];
      const GreatCircle& circ = cfg.circle(rec.circle);
      double ang = std::atan2(circ.v().dot(rec.midpoint), circ.u().dot(rec.midpoint));
      per_circle[rec.circle].push_back({ang, static_cast<int>(p), e});
    }
  for (auto& [ref, list] : per_circle) {
    std::sort(list.begin(), list.end(), [](const Instance& a, const Instance& b) {
      return a.angle < b.angle;
    });
    std::size_t i = 0;
    while (i < list.size()) {
      std::size_t k = i + 1;
      while (k < list.size() && list[k].angle - list[i].angle < 1e-9) ++k;
      // wrap-around: the group at angle ~ -pi joins the one at ~ +pi
      bool wraps = (i == 0 && !list.empty() && list.back().angle - (list[0].angle + 2 * kPi) > -1e-9);
      SharedEdge edge;
      edge.circle = ref;
      edge.midpoint = cfg.prisms[list[i].prism].edges[list[i].local].midpoint;
      for (std::size_t t = i; t < k; ++t) {
        edge.prisms.push_back(list[t].prism);
        cfg.prisms[list[t].prism].edges[list[t].local].shared_edge =
            static_cast<int>(cfg.shared_edges.size());
      }
      if (wraps) {
        while (!list.empty() && (list[0].angle + 2 * kPi) - list.back().angle < 1e-9) {
          edge.prisms.push_back(list.back().prism);
          cfg.prisms[list.back().prism].edges[list.back().local].shared_edge =
              static_cast<int>(cfg.shared_edges.size());
          list.pop_back();
        }
      }
      cfg.shared_edges.push_back(std::move(edge));
      i = k;
    }
  }
  for (const auto& e : cfg.shared_edges)
    if (e.prisms.size() != 4)
      throw Error("a prism edge is shared by " + std::to_string(e.prisms.size()) +
                  " prisms, expected 4");

  return cfg;
}

std::vector<Isometry> symmetry_generators(const Configuration& cfg) {
  std::vector<Isometry> gens;
  gens.reserve(cfg.scaf.size() + cfg.rcol.size());
  for (const auto& circ : cfg.scaf) gens.push_back(refl(circ));
  for (const auto& circ : cfg.rcol) gens.push_back(refl(circ));
  return gens;
}

FiniteGroup symmetry_group(const Configuration& cfg, std::size_t cap) {
  if (cap == 0) cap = 64 * static_cast<std::size_t>(cfg.N) + 64;
  return FiniteGroup::generate(symmetry_generators(cfg), cap);
}

const SharedEdge& shared_edge_prisms(const Configuration& cfg, const Vec4& edge_midpoint,
                                     double tol) {
  for (const auto& e : cfg.shared_edges)
    if ((e.midpoint - edge_midpoint).norm() < tol) return e;
  throw NotAPrismEdge("no prism edge with the given midpoint");
}

const SharedEdge& shared_edge_prisms(const Configuration& cfg, int prism, int local_edge) {
  int idx = cfg.prisms.at(prism).edges.at(local_edge).shared_edge;
  if (idx < 0) throw NotAPrismEdge("edge is not glued");
  return cfg.shared_edges[idx];
}

}  // namespace s3min
