#include "s3min/configuration.hpp"
#include "s3min/errors.hpp"

#include <deque>

namespace s3min {

namespace {

/// The pairing the edge-circle reflection induces on the four prisms at a
/// shared edge.  pair_of[i] is the position (within edge.prisms) of the
/// reflection image of edge.prisms[i]; the pairing is a product of two
/// 2-cycles.
std::array<int, 4> edge_pairing(const Configuration& cfg, const SharedEdge& edge) {
  Isometry r = refl(cfg.circle(edge.circle));
  std::array<int, 4> pair_of{-1, -1, -1, -1};
  for (int i = 0; i < 4; ++i) {
    Vec4 image = r.apply(cfg.prisms[edge.prisms[i]].center.vec());
    int target = cfg.find_prism_by_center(image);
    for (int k = 0; k < 4; ++k)
      if (edge.prisms[k] == target) pair_of[i] = k;
    if (pair_of[i] < 0 || pair_of[i] == i)
      throw Error("edge reflection does not exchange the adjacent prisms in pairs");
  }
  return pair_of;
}

}  // namespace

ColoringResult propagate_coloring(const Configuration& cfg, int seed_prism,
                                  std::uint8_t seed_value) {
  if (!cfg.full) throw InvalidN("coloring requires the full configuration (N divisible by 4)");
  const int n = static_cast<int>(cfg.prisms.size());
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  color[seed_prism] = seed_value;

  std::vector<std::array<int, 4>> pairings(cfg.shared_edges.size());
  std::vector<bool> pairing_done(cfg.shared_edges.size(), false);

  std::deque<int> queue{seed_prism};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int e = 0; e < 6; ++e) {
      int se = cfg.prisms[p].edges[e].shared_edge;
      const SharedEdge& edge = cfg.shared_edges[se];
      if (!pairing_done[se]) {
        pairings[se] = edge_pairing(cfg, edge);
        pairing_done[se] = true;
      }
      int pos = -1;
      for (int i = 0; i < 4; ++i)
        if (edge.prisms[i] == p) pos = i;
      for (int i = 0; i < 4; ++i) {
        int q = edge.prisms[i];
        if (q == p) continue;
        int required = (pairings[se][pos] == i) ? color[p] : 1 - color[p];
        if (color[q] < 0) {
          color[q] = required;
          parent[q] = p;
          queue.push_back(q);
        } else if (color[q] != required) {
          // Contradiction: walk both prisms back to the BFS root.
          ColoringResult res;
          std::vector<int> path_p, path_q;
          for (int x = p; x >= 0; x = parent[x]) path_p.push_back(x);
          for (int x = q; x >= 0; x = parent[x]) path_q.push_back(x);
          res.witness = path_p;
          res.witness.insert(res.witness.end(), path_q.rbegin(), path_q.rend());
          return res;
        }
      }
    }
  }

  ColoringResult res;
  Coloring c;
  c.values.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (color[i] < 0) throw Error("coloring propagation did not reach every prism");
    c.values[i] = static_cast<std::uint8_t>(color[i]);
  }
  res.coloring = std::move(c);
  return res;
}

bool coloring_consistent(const Configuration& cfg, const Coloring& c) {
  for (const auto& edge : cfg.shared_edges) {
    auto pair_of = edge_pairing(cfg, edge);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        if (i == k) continue;
        bool same = c.values[edge.prisms[i]] == c.values[edge.prisms[k]];
        if (same != (pair_of[i] == k)) return false;
      }
  }
  return true;
}

DualityReport verify_orbit_coloring_duality(const Configuration& cfg, const FiniteGroup& g,
                                            const Coloring& c) {
  DualityReport rep;
  const int n = static_cast<int>(cfg.prisms.size());

  auto orbit_set = [&](int seed) {
    std::vector<bool> in(n, false);
    for (std::size_t e = 0; e < g.size(); ++e) {
      Vec4 image = g.at(e).apply(cfg.prisms[seed].center.vec());
      int idx = cfg.find_prism_by_center(image);
      if (idx < 0) throw Error("group element does not preserve the prism collection");
      in[idx] = true;
    }
    return in;
  };

  int seed0 = 0;
  int seed1 = -1;
  for (int i = 0; i < n; ++i)
    if (c.values[i] != c.values[seed0]) {
      seed1 = i;
      break;
    }
  if (seed1 < 0) return rep;

  auto in0 = orbit_set(seed0), in1 = orbit_set(seed1);
  rep.level_sets_are_orbits = true;
  for (int i = 0; i < n; ++i) {
    if (in0[i]) ++rep.orbit_size_0;
    if (in1[i]) ++rep.orbit_size_1;
    if (in0[i] != (c.values[i] == c.values[seed0])) rep.level_sets_are_orbits = false;
    if (in1[i] != (c.values[i] == c.values[seed1])) rep.level_sets_are_orbits = false;
  }

  // c o g stays consistent for every generator g.
  rep.composed_colorings_consistent = true;
  const auto& gens = g.generators().empty() ? symmetry_generators(cfg) : g.generators();
  for (const auto& gen : gens) {
    Coloring composed;
    composed.values.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      int image = cfg.find_prism_by_center(gen.apply(cfg.prisms[i].center.vec()));
      if (image < 0) throw Error("generator does not preserve the prism collection");
      composed.values[i] = c.values[image];
    }
    if (!coloring_consistent(cfg, composed)) rep.composed_colorings_consistent = false;
  }

  rep.ok = rep.level_sets_are_orbits && rep.composed_colorings_consistent &&
           rep.orbit_size_0 == cfg.prisms.size() / 2 &&
           rep.orbit_size_1 == cfg.prisms.size() / 2;
  return rep;
}

}  // namespace s3min
