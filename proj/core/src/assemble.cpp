#include "s3min/assemble.hpp"

#include "s3min/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_map>

namespace s3min {

namespace {

using QuantKey = std::array<std::int64_t, 4>;

QuantKey quant_key(const Vec4& v, double cell) {
  QuantKey k;
  for (int i = 0; i < 4; ++i) k[i] = static_cast<std::int64_t>(std::floor(v[i] / cell));
  return k;
}

struct QuantKeyHash {
  std::size_t operator()(const QuantKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Point bucket index over 4d cells with neighbor probing.
class PointGrid {
 public:
  explicit PointGrid(double cell) : cell_(cell) {}

  int find(const Vec4& p, double tol, const std::vector<Vec4>& points) const {
    QuantKey base = quant_key(p, cell_);
    for (int d0 = -1; d0 <= 1; ++d0)
      for (int d1 = -1; d1 <= 1; ++d1)
        for (int d2 = -1; d2 <= 1; ++d2)
          for (int d3 = -1; d3 <= 1; ++d3) {
            QuantKey k{base[0] + d0, base[1] + d1, base[2] + d2, base[3] + d3};
            auto it = cells_.find(k);
            if (it == cells_.end()) continue;
            for (int idx : it->second)
              if ((points[idx] - p).norm() < tol) return idx;
          }
    return -1;
  }

  void insert(const Vec4& p, int idx) { cells_[quant_key(p, cell_)].push_back(idx); }

  template <class Fn>
  void visit_near(const Vec4& p, int rings, Fn&& fn) const {
    QuantKey base = quant_key(p, cell_);
    for (int d0 = -rings; d0 <= rings; ++d0)
      for (int d1 = -rings; d1 <= rings; ++d1)
        for (int d2 = -rings; d2 <= rings; ++d2)
          for (int d3 = -rings; d3 <= rings; ++d3) {
            auto it = cells_.find(QuantKey{base[0] + d0, base[1] + d1, base[2] + d2, base[3] + d3});
            if (it == cells_.end()) continue;
            for (int idx : it->second) fn(idx);
          }
  }

 private:
  double cell_;
  std::unordered_map<QuantKey, std::vector<int>, QuantKeyHash> cells_;
};

}  // namespace

AssembledSurface assemble(const DiscMesh& disc, const FiniteGroup& group,
                          const Isometry& placement, double weld_tol) {
  if (disc.vertices.empty()) throw WeldFailure("cannot assemble an empty disc");

  // World-frame disc and its reflection symmetry (through the prism axis).
  std::vector<Vec4> world(disc.vertices.size());
  for (std::size_t v = 0; v < disc.vertices.size(); ++v)
    world[v] = placement.apply(disc.vertices[v]);
  Isometry world_refl = placement * refl(circle_c00()) * placement.inverse();

  std::array<Vec4, 6> corners;
  for (std::size_t v = 0; v < disc.vertices.size(); ++v)
    if (disc.vertex_tag[v] >= 6) corners[disc.vertex_tag[v] - 6] = world[v];

  // An interior probe off the symmetry axis distinguishes the two discs that
  // share a hexagon.
  int probe = -1;
  double best = std::numeric_limits<double>::max();
  for (std::size_t v = 0; v < disc.vertices.size(); ++v) {
    if (disc.is_boundary(static_cast<int>(v))) continue;
    if ((world_refl.apply(world[v]) - world[v]).norm() < 1e-3) continue;
    double d = (world[v] - corners[1]).norm();
    if (d < best) {
      best = d;
      probe = static_cast<int>(v);
    }
  }
  if (probe < 0) throw WeldFailure("disc has no interior vertex off the symmetry axis");

  auto copy_key = [&](const Isometry& g) {
    std::vector<QuantKey> parts;
    for (const auto& c : corners) parts.push_back(quant_key(g.apply(c), 1e-7));
    QuantKey p1 = quant_key(g.apply(world[probe]), 1e-7);
    QuantKey p2 = quant_key(g.apply(world_refl.apply(world[probe])), 1e-7);
    if (p2 < p1) std::swap(p1, p2);
    std::sort(parts.begin(), parts.end());
    parts.push_back(p1);
    parts.push_back(p2);
    std::string key;
    key.reserve(parts.size() * sizeof(QuantKey));
    for (const auto& part : parts)
      key.append(reinterpret_cast<const char*>(part.data()), sizeof(QuantKey));
    return key;
  };

  AssembledSurface out;
  std::unordered_map<std::string, int> seen;
  for (std::size_t e = 0; e < group.size(); ++e)
    if (seen.emplace(copy_key(group.at(e)), static_cast<int>(e)).second)
      out.copy_elements.push_back(static_cast<int>(e));

  // Weld boundary vertices by position; interior vertices stay private.
  PointGrid grid(std::max(weld_tol * 4, 1e-9));
  std::vector<int> global(out.copy_elements.size() * disc.vertices.size(), -1);
  for (std::size_t c = 0; c < out.copy_elements.size(); ++c) {
    const Isometry& g = group.at(out.copy_elements[c]);
    for (std::size_t v = 0; v < disc.vertices.size(); ++v) {
      Vec4 pos = g.apply(world[v]);
      int id;
      if (disc.is_boundary(static_cast<int>(v))) {
        id = grid.find(pos, weld_tol, out.vertices);
        if (id < 0) {
          id = static_cast<int>(out.vertices.size());
          out.vertices.push_back(pos);
          grid.insert(pos, id);
        }
      } else {
        id = static_cast<int>(out.vertices.size());
        out.vertices.push_back(pos);
      }
      global[c * disc.vertices.size() + v] = id;
    }
    for (const auto& t : disc.triangles) {
      out.triangles.push_back({global[c * disc.vertices.size() + t[0]],
                               global[c * disc.vertices.size() + t[1]],
                               global[c * disc.vertices.size() + t[2]]});
      out.triangle_copy.push_back(static_cast<int>(c));
    }
  }

  // Closedness and a consistent orientation, propagated across welds.
  std::map<std::pair<int, int>, std::vector<int>> edge_tris;
  for (std::size_t t = 0; t < out.triangles.size(); ++t) {
    const auto& tri = out.triangles[t];
    for (int e = 0; e < 3; ++e) {
      int a = tri[e], b = tri[(e + 1) % 3];
      edge_tris[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(t));
    }
  }
  out.closed = true;
  for (const auto& [e, ts] : edge_tris)
    if (ts.size() != 2) out.closed = false;

  out.orientable = false;
  if (out.closed) {
    std::vector<int> state(out.triangles.size(), 0);  // 0 unseen, 1 keep, 2 flip
    auto oriented_has = [&](int t, int a, int b) {
      const auto& tri = out.triangles[t];
      bool flipped = state[t] == 2;
      for (int e = 0; e < 3; ++e) {
        int x = tri[e], y = tri[(e + 1) % 3];
        if (flipped) std::swap(x, y);
        if (x == a && y == b) return true;
      }
      return false;
    };
    out.orientable = true;
    for (std::size_t seed = 0; seed < out.triangles.size() && out.orientable; ++seed) {
      if (state[seed]) continue;
      state[seed] = 1;
      std::deque<int> queue{static_cast<int>(seed)};
      while (!queue.empty() && out.orientable) {
        int t = queue.front();
        queue.pop_front();
        const auto& tri = out.triangles[t];
        bool flipped = state[t] == 2;
        for (int e = 0; e < 3; ++e) {
          int a = tri[e], b = tri[(e + 1) % 3];
          if (flipped) std::swap(a, b);
          auto& ts = edge_tris[{std::min(a, b), std::max(a, b)}];
          int other = ts[0] == t ? ts[1] : ts[0];
          // The neighbor must traverse the shared edge in the opposite sense.
          if (state[other] == 0) {
            state[other] = oriented_has(other, a, b) ? 2 : 1;
            queue.push_back(other);
          } else if (oriented_has(other, a, b)) {
            out.orientable = false;
          }
        }
      }
    }
    if (out.orientable)
      for (std::size_t t = 0; t < out.triangles.size(); ++t)
        if (state[t] == 2) std::swap(out.triangles[t][1], out.triangles[t][2]);
  }
  return out;
}

TopologyReport surface_topology(const AssembledSurface& surface) {
  if (!surface.closed) throw NotClosed("surface is not closed");
  std::map<std::pair<int, int>, int> edges;
  for (const auto& tri : surface.triangles)
    for (int e = 0; e < 3; ++e) {
      int a = tri[e], b = tri[(e + 1) % 3];
      ++edges[{std::min(a, b), std::max(a, b)}];
    }
  TopologyReport rep;
  rep.vertices = surface.vertices.size();
  rep.edges = edges.size();
  rep.faces = surface.triangles.size();
  rep.euler_characteristic = static_cast<int>(rep.vertices) - static_cast<int>(rep.edges) +
                             static_cast<int>(rep.faces);
  rep.genus = (2 - rep.euler_characteristic) / 2;
  rep.copy_count = surface.copy_count();

  std::vector<double> angle_sum(surface.vertices.size(), 0.0);
  for (const auto& tri : surface.triangles)
    for (int k = 0; k < 3; ++k) {
      const Vec4 &p = surface.vertices[tri[k]], &q = surface.vertices[tri[(k + 1) % 3]],
                 &r = surface.vertices[tri[(k + 2) % 3]];
      Vec4 u = (q - p).normalized(), v = (r - p).normalized();
      angle_sum[tri[k]] += std::acos(std::clamp(u.dot(v), -1.0, 1.0));
    }
  double tc = 0.0;
  for (double s : angle_sum) tc += 2 * kPi - s;
  rep.total_curvature = tc;
  return rep;
}

bool vertex_set_invariant(const AssembledSurface& surface, const Isometry& g, double tol) {
  PointGrid grid(std::max(tol * 4, 1e-9));
  for (std::size_t v = 0; v < surface.vertices.size(); ++v)
    grid.insert(surface.vertices[v], static_cast<int>(v));
  for (const auto& v : surface.vertices)
    if (grid.find(g.apply(v), tol, surface.vertices) < 0) return false;
  return true;
}

namespace {

/// Spherical distance from unit q to the radial projection of triangle
/// (a, b, c) (unit vertices).
double point_spherical_triangle_distance(const Vec4& q, const Vec4& a, const Vec4& b,
                                         const Vec4& c) {
  Vec4 n = cross4(a, b, c);
  double nn = n.norm();
  double best = std::numeric_limits<double>::max();
  if (nn > 1e-14) {
    n /= nn;
    Vec4 qv = q - n.dot(q) * n;
    double qn = qv.norm();
    if (qn > 1e-14) {
      Vec4 qhat = qv / qn;
      Eigen::Matrix3d gram;
      Eigen::Vector3d rhs;
      const Vec4* basis[3] = {&a, &b, &c};
      for (int i = 0; i < 3; ++i) {
        rhs[i] = basis[i]->dot(qhat);
        for (int j = 0; j < 3; ++j) gram(i, j) = basis[i]->dot(*basis[j]);
      }
      Eigen::Vector3d lambda = gram.ldlt().solve(rhs);
      if (lambda.minCoeff() >= -1e-9)
        best = std::acos(std::clamp(q.dot(qhat), -1.0, 1.0));
    }
  }
  auto arc_distance = [&](const Vec4& x, const Vec4& y) {
    Vec4 w = y - x.dot(y) * x;
    double wn = w.norm();
    if (wn < 1e-14) return std::acos(std::clamp(q.dot(x), -1.0, 1.0));
    w /= wn;
    double phi = std::atan2(q.dot(w), q.dot(x));
    double len = std::atan2(wn, x.dot(y));
    phi = std::clamp(phi, 0.0, len);
    Vec4 nearest = std::cos(phi) * x + std::sin(phi) * w;
    return std::acos(std::clamp(q.dot(nearest), -1.0, 1.0));
  };
  best = std::min(best, arc_distance(a, b));
  best = std::min(best, arc_distance(b, c));
  best = std::min(best, arc_distance(c, a));
  return best;
}

}  // namespace

CircleContainment check_circle_containment(const AssembledSurface& surface,
                                           const std::vector<GreatCircle>& circles,
                                           int samples) {
  // Normalized vertex positions plus incidence; circle samples are expected
  // to sit on welded boundary arcs, so nearby vertices carry the candidates.
  std::vector<Vec4> unit(surface.vertices.size());
  for (std::size_t v = 0; v < surface.vertices.size(); ++v)
    unit[v] = surface.vertices[v].normalized();
  std::vector<std::vector<int>> incident(surface.vertices.size());
  double max_radius = 0.0;
  for (std::size_t t = 0; t < surface.triangles.size(); ++t) {
    const auto& tri = surface.triangles[t];
    for (int k = 0; k < 3; ++k) incident[tri[k]].push_back(static_cast<int>(t));
    max_radius = std::max({max_radius, (unit[tri[0]] - unit[tri[1]]).norm(),
                           (unit[tri[1]] - unit[tri[2]]).norm(),
                           (unit[tri[2]] - unit[tri[0]]).norm()});
  }
  PointGrid grid(std::max(max_radius, 1e-6));
  for (std::size_t v = 0; v < unit.size(); ++v) grid.insert(unit[v], static_cast<int>(v));

  CircleContainment rep;
  for (const auto& circle : circles) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      Vec4 q = circle.point(2 * kPi * s / samples);
      double best = std::numeric_limits<double>::max();
      grid.visit_near(q, 1, [&](int v) {
        for (int t : incident[v]) {
          const auto& tri = surface.triangles[t];
          best = std::min(best, point_spherical_triangle_distance(q, unit[tri[0]], unit[tri[1]],
                                                                  unit[tri[2]]));
        }
      });
      worst = std::max(worst, best);
    }
    rep.max_distance.push_back(worst);
    rep.worst = std::max(rep.worst, worst);
  }
  return rep;
}

double circle_distance_lower_bound(const AssembledSurface& surface, const GreatCircle& circle,
                                   int samples) {
  double max_radius = 0.0;
  for (const auto& tri : surface.triangles) {
    Vec4 centroid =
        (surface.vertices[tri[0]] + surface.vertices[tri[1]] + surface.vertices[tri[2]]) / 3.0;
    for (int k = 0; k < 3; ++k)
      max_radius = std::max(max_radius, (surface.vertices[tri[k]] - centroid).norm());
  }
  double min_vertex = std::numeric_limits<double>::max();
  for (int s = 0; s < samples; ++s) {
    Vec4 q = circle.point(2 * kPi * s / samples);
    for (const auto& v : surface.vertices) min_vertex = std::min(min_vertex, (v - q).norm());
  }
  return std::max(0.0, min_vertex - max_radius);
}

int count_copy_crossings(const AssembledSurface& surface) {
  // Candidate pairs via a centroid grid; crossing = nonempty intersection of
  // the two spherical triangles along the great circle where their 3-spaces
  // meet.
  std::vector<Vec4> unit(surface.vertices.size());
  for (std::size_t v = 0; v < surface.vertices.size(); ++v)
    unit[v] = surface.vertices[v].normalized();

  std::vector<Vec4> centroid(surface.triangles.size());
  double cell = 0.0;
  for (std::size_t t = 0; t < surface.triangles.size(); ++t) {
    const auto& tri = surface.triangles[t];
    centroid[t] = ((unit[tri[0]] + unit[tri[1]] + unit[tri[2]]) / 3.0);
    for (int k = 0; k < 3; ++k)
      cell = std::max(cell, (unit[tri[k]] - centroid[t]).norm());
  }
  cell = std::max(cell * 1.5, 1e-6);
  PointGrid grid(cell);
  for (std::size_t t = 0; t < surface.triangles.size(); ++t)
    grid.insert(centroid[t], static_cast<int>(t));

  auto share_vertex = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int x : a)
      for (int y : b)
        if (x == y) return true;
    return false;
  };

  auto triangle_arcs = [&](int t, const Vec4& w1, const Vec4& w2,
                           std::vector<std::pair<double, double>>& arcs) {
    // Positivity arcs of the three cone-facet inequalities along the circle
    // cos(t) w1 + sin(t) w2.
    const auto& tri = surface.triangles[t];
    Vec4 a = unit[tri[0]], b = unit[tri[1]], c = unit[tri[2]];
    Vec4 n = cross4(a, b, c);
    if (n.norm() < 1e-14) return false;
    n.normalize();
    Vec4 facets[3] = {cross4(a, b, n), cross4(b, c, n), cross4(c, a, n)};
    Vec4 opposite[3] = {c, a, b};
    arcs.clear();
    for (int f = 0; f < 3; ++f) {
      Vec4 m = facets[f];
      if (m.dot(opposite[f]) < 0) m = -m;
      double alpha = m.dot(w1), beta = m.dot(w2);
      double r = std::hypot(alpha, beta);
      if (r < 1e-13) continue;  // the facet plane contains the whole circle
      double phi = std::atan2(beta, alpha);
      // alpha cos t + beta sin t >= 0  <=>  t in [phi - pi/2, phi + pi/2]
      arcs.push_back({phi - kPi / 2, phi + kPi / 2});
    }
    return true;
  };

  auto intersect_arcs = [](std::vector<std::pair<double, double>>& all) {
    // Intersect arcs of half-circle length on the circle; track a running
    // intersection as a list of intervals in [0, 2 pi).
    std::vector<std::pair<double, double>> cur{{0.0, 2 * kPi}};
    auto norm = [](double x) {
      x = std::fmod(x, 2 * kPi);
      return x < 0 ? x + 2 * kPi : x;
    };
    for (auto [lo, hi] : all) {
      std::vector<std::pair<double, double>> pieces;
      double a = norm(lo), b = norm(hi);
      if (a <= b)
        pieces.push_back({a, b});
      else {
        pieces.push_back({a, 2 * kPi});
        pieces.push_back({0.0, b});
      }
      std::vector<std::pair<double, double>> next;
      for (auto [c0, c1] : cur)
        for (auto [p0, p1] : pieces) {
          double lo2 = std::max(c0, p0), hi2 = std::min(c1, p1);
          if (hi2 - lo2 > 1e-9) next.push_back({lo2, hi2});
        }
      cur = std::move(next);
      if (cur.empty()) break;
    }
    return cur;
  };

  int crossings = 0;
  std::vector<std::pair<double, double>> arcs1, arcs2, all;
  for (std::size_t t1 = 0; t1 < surface.triangles.size(); ++t1) {
    grid.visit_near(centroid[t1], 2, [&](int t2) {
      if (static_cast<std::size_t>(t2) <= t1) return;
      if (surface.triangle_copy[t1] == surface.triangle_copy[t2]) return;
      if (share_vertex(surface.triangles[t1], surface.triangles[t2])) return;
      const auto &ta = surface.triangles[t1], &tb = surface.triangles[t2];
      Vec4 n1 = cross4(unit[ta[0]], unit[ta[1]], unit[ta[2]]);
      Vec4 n2 = cross4(unit[tb[0]], unit[tb[1]], unit[tb[2]]);
      if (n1.norm() < 1e-14 || n2.norm() < 1e-14) return;
      n1.normalize();
      n2.normalize();
      if (std::abs(n1.dot(n2)) > 1.0 - 1e-12) {
        // Same 3-space: crossing only if a vertex of one is strictly inside
        // the other (mesh-scale test).
        for (int k = 0; k < 3; ++k)
          if (point_spherical_triangle_distance(unit[tb[k]], unit[ta[0]], unit[ta[1]],
                                                unit[ta[2]]) < 1e-9)
            ++crossings;
        return;
      }
      // Basis of the intersection plane of the two 3-spaces: the orthogonal
      // complement of span(n1, n2).
      Vec4 m2 = (n2 - n1.dot(n2) * n1).normalized();
      Vec4 w1 = Vec4::Zero(), w2 = Vec4::Zero();
      int found = 0;
      for (int axis = 0; axis < 4 && found < 2; ++axis) {
        Vec4 e = Vec4::Zero();
        e[axis] = 1.0;
        Vec4 w = e - n1.dot(e) * n1 - m2.dot(e) * m2;
        if (found == 1) w -= w1.dot(w) * w1;
        double nw = w.norm();
        if (nw > 1e-7) {
          (found == 0 ? w1 : w2) = w / nw;
          ++found;
        }
      }
      if (found < 2) return;
      if (!triangle_arcs(static_cast<int>(t1), w1, w2, arcs1)) return;
      if (!triangle_arcs(t2, w1, w2, arcs2)) return;
      all = arcs1;
      all.insert(all.end(), arcs2.begin(), arcs2.end());
      if (!intersect_arcs(all).empty()) ++crossings;
    });
  }
  return crossings;
}

}  // namespace s3min
