#include "s3min/plateau.hpp"

#include "s3min/errors.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace s3min {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::map<EdgeKey, int> edge_triangle_counts(const DiscMesh& mesh) {
  std::map<EdgeKey, int> count;
  for (const auto& t : mesh.triangles)
    for (int e = 0; e < 3; ++e) ++count[edge_key(t[e], t[(e + 1) % 3])];
  return count;
}

double triangle_area(const Vec4& p, const Vec4& q, const Vec4& r) {
  Vec4 u = q - p, v = r - p;
  double g = u.squaredNorm() * v.squaredNorm() - std::pow(u.dot(v), 2);
  return 0.5 * std::sqrt(std::max(g, 0.0));
}

double angle_at(const Vec4& p, const Vec4& q, const Vec4& r) {
  Vec4 u = (q - p).normalized(), v = (r - p).normalized();
  return std::acos(std::clamp(u.dot(v), -1.0, 1.0));
}

/// Which hexagon edge a mesh boundary edge between two tagged vertices lies
/// on.  Corner k joins hexagon edges (k+5) % 6 and k.
int hexagon_edge_of(int tag_a, int tag_b) {
  auto edges_of = [](int tag, int out[2]) {
    if (tag < 6) {
      out[0] = tag;
      out[1] = tag;
    } else {
      int corner = tag - 6;
      out[0] = (corner + 5) % 6;
      out[1] = corner;
    }
  };
  int ea[2], eb[2];
  edges_of(tag_a, ea);
  edges_of(tag_b, eb);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (ea[i] == eb[j]) return ea[i];
  return -1;
}

double boundary_param(const DiscMesh& mesh, int v, int hex_edge) {
  int tag = mesh.vertex_tag[v];
  if (tag < 6) return mesh.vertex_param[v];
  int corner = tag - 6;
  return corner == hex_edge ? 0.0 : 1.0;  // edge k runs corner k -> corner k+1
}

}  // namespace

int euler_characteristic(const DiscMesh& mesh) {
  auto counts = edge_triangle_counts(mesh);
  return static_cast<int>(mesh.vertices.size()) - static_cast<int>(counts.size()) +
         static_cast<int>(mesh.triangles.size());
}

int boundary_loop_count(const DiscMesh& mesh) {
  auto counts = edge_triangle_counts(mesh);
  std::map<int, std::vector<int>> next;
  for (const auto& [e, c] : counts)
    if (c == 1) {
      next[e.first].push_back(e.second);
      next[e.second].push_back(e.first);
    }
  std::map<int, bool> visited;
  int loops = 0;
  for (const auto& [v, nbrs] : next) {
    if (visited[v]) continue;
    ++loops;
    int cur = v, prev = -1;
    while (!visited[cur]) {
      visited[cur] = true;
      const auto& n = next[cur];
      int go = (n.size() > 0 && n[0] != prev) ? n[0] : (n.size() > 1 ? n[1] : -1);
      if (go < 0) break;
      prev = cur;
      cur = go;
    }
  }
  return loops;
}

double total_area(const DiscMesh& mesh) {
  // Compensated summation: late-stage area comparisons live near the
  // round-off floor of a naive sum.
  double sum = 0.0, comp = 0.0;
  for (const auto& t : mesh.triangles) {
    double a = triangle_area(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
    double y = a - comp;
    double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return sum;
}

std::vector<Vec4> area_gradient(const DiscMesh& mesh) {
  std::vector<Vec4> grad(mesh.vertices.size(), Vec4::Zero());
  for (const auto& t : mesh.triangles) {
    const Vec4 &p = mesh.vertices[t[0]], &q = mesh.vertices[t[1]], &r = mesh.vertices[t[2]];
    Vec4 u = q - p, v = r - p;
    double uu = u.squaredNorm(), vv = v.squaredNorm(), uv = u.dot(v);
    double g = uu * vv - uv * uv;
    double a = 0.5 * std::sqrt(std::max(g, 1e-300));
    Vec4 dq = (vv * u - uv * v) / (4 * a);
    Vec4 dr = (uu * v - uv * u) / (4 * a);
    grad[t[1]] += dq;
    grad[t[2]] += dr;
    grad[t[0]] -= dq + dr;
  }
  return grad;
}

std::vector<double> vertex_dual_areas(const DiscMesh& mesh) {
  std::vector<double> m(mesh.vertices.size(), 0.0);
  for (const auto& t : mesh.triangles) {
    double a = triangle_area(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]) / 3.0;
    m[t[0]] += a;
    m[t[1]] += a;
    m[t[2]] += a;
  }
  return m;
}

double disc_total_curvature(const DiscMesh& mesh) {
  std::vector<double> angle_sum(mesh.vertices.size(), 0.0);
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k)
      angle_sum[t[k]] += angle_at(mesh.vertices[t[k]], mesh.vertices[t[(k + 1) % 3]],
                                  mesh.vertices[t[(k + 2) % 3]]);
  double tc = 0.0;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
    if (!mesh.is_boundary(static_cast<int>(v))) tc += 2 * kPi - angle_sum[v];
  return tc;
}

double stationarity_residual(const DiscMesh& mesh) {
  auto grad = area_gradient(mesh);
  auto mass = vertex_dual_areas(mesh);
  double res = 0.0;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    if (mesh.is_boundary(static_cast<int>(v))) continue;
    const Vec4& p = mesh.vertices[v];
    Vec4 gt = grad[v] - grad[v].dot(p) * p;
    res = std::max(res, gt.norm() / mass[v]);
  }
  return res;
}

DiscMesh subdivide(const StandardPrism& prism, const DiscMesh& mesh) {
  DiscMesh out;
  out.refinement = mesh.refinement + 1;
  out.vertices = mesh.vertices;
  out.vertex_tag = mesh.vertex_tag;
  out.vertex_param = mesh.vertex_param;

  auto counts = edge_triangle_counts(mesh);
  std::map<EdgeKey, int> midpoint;
  for (const auto& [e, c] : counts) {
    int a = e.first, b = e.second;
    int idx = static_cast<int>(out.vertices.size());
    bool boundary_edge = (c == 1) && mesh.is_boundary(a) && mesh.is_boundary(b);
    if (boundary_edge) {
      int hex = hexagon_edge_of(mesh.vertex_tag[a], mesh.vertex_tag[b]);
      if (hex < 0) throw BoundaryAssemblyFailure("boundary edge has inconsistent tags");
      double t = 0.5 * (boundary_param(mesh, a, hex) + boundary_param(mesh, b, hex));
      out.vertices.push_back(prism.hexagon_edge_point(hex, t));
      out.vertex_tag.push_back(hex);
      out.vertex_param.push_back(t);
    } else {
      Vec4 m = mesh.vertices[a] + mesh.vertices[b];
      out.vertices.push_back(m.normalized());
      out.vertex_tag.push_back(-1);
      out.vertex_param.push_back(0.0);
    }
    midpoint[e] = idx;
  }

  for (const auto& t : mesh.triangles) {
    int m01 = midpoint[edge_key(t[0], t[1])];
    int m12 = midpoint[edge_key(t[1], t[2])];
    int m20 = midpoint[edge_key(t[2], t[0])];
    out.triangles.push_back({t[0], m01, m20});
    out.triangles.push_back({t[1], m12, m01});
    out.triangles.push_back({t[2], m20, m12});
    out.triangles.push_back({m01, m12, m20});
  }
  return out;
}

DiscMesh initial_mesh(const StandardPrism& prism, int level) {
  DiscMesh mesh;
  mesh.refinement = 0;
  auto corners = prism.hexagon_vertices();
  for (int k = 0; k < 6; ++k) {
    mesh.vertices.push_back(corners[k]);
    mesh.vertex_tag.push_back(6 + k);
    mesh.vertex_param.push_back(0.0);
  }
  Vec4 center = Vec4::Zero();
  for (const auto& c : corners) center += c;
  mesh.vertices.push_back(center.normalized());
  mesh.vertex_tag.push_back(-1);
  mesh.vertex_param.push_back(0.0);
  for (int k = 0; k < 6; ++k) mesh.triangles.push_back({k, (k + 1) % 6, 6});

  for (int l = 0; l < level; ++l) mesh = subdivide(prism, mesh);

  // Transfinite blend: combinatorially harmonic interpolation of the chart
  // coordinates from the boundary arcs, evaluated through the chart.
  struct Chart {
    double r, theta, z;
  };
  const double S = prism.S(), Theta = prism.Theta(), Z = prism.Z();
  auto boundary_chart = [&](int v) -> Chart {
    int tag = mesh.vertex_tag[v];
    if (tag >= 6) {
      int corner = tag - 6;
      switch (corner) {
        case 0: return {0, 0, Z / 2};  // apex: theta is a free choice here
        case 1: return {S, Theta / 2, Z / 2};
        case 2: return {S, Theta / 2, -Z / 2};
        case 3: return {0, 0, -Z / 2};
        case 4: return {S, -Theta / 2, -Z / 2};
        case 5: return {S, -Theta / 2, Z / 2};
      }
    }
    double t = mesh.vertex_param[v];
    switch (tag) {
      case 0: return {S * t, Theta / 2, Z / 2};
      case 1: return {S, Theta / 2, Z / 2 - Z * t};
      case 2: return {S * (1 - t), Theta / 2, -Z / 2};
      case 3: return {S * t, -Theta / 2, -Z / 2};
      case 4: return {S, -Theta / 2, -Z / 2 + Z * t};
      case 5: return {S * (1 - t), -Theta / 2, Z / 2};
    }
    throw Error("bad boundary tag");
  };

  const std::size_t n = mesh.vertices.size();
  std::vector<std::vector<int>> nbrs(n);
  {
    auto counts = edge_triangle_counts(mesh);
    for (const auto& [e, c] : counts) {
      nbrs[e.first].push_back(e.second);
      nbrs[e.second].push_back(e.first);
    }
  }
  std::vector<Chart> chart(n, {S / 2, 0, 0});
  std::vector<bool> fixed(n, false);
  for (std::size_t v = 0; v < n; ++v)
    if (mesh.is_boundary(static_cast<int>(v))) {
      chart[v] = boundary_chart(static_cast<int>(v));
      fixed[v] = true;
    }
  for (int sweep = 0; sweep < 300; ++sweep) {
    std::vector<Chart> next = chart;
    for (std::size_t v = 0; v < n; ++v) {
      if (fixed[v]) continue;
      double r = 0, th = 0, z = 0;
      for (int w : nbrs[v]) {
        r += chart[w].r;
        th += chart[w].theta;
        z += chart[w].z;
      }
      double inv = 1.0 / static_cast<double>(nbrs[v].size());
      next[v] = {r * inv, th * inv, z * inv};
    }
    chart.swap(next);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!fixed[v]) mesh.vertices[v] = toroidal_point(chart[v].r, chart[v].theta, chart[v].z);
  return mesh;
}

namespace {

/// One pass of Armijo-backtracked preconditioned gradient descent.
/// Returns the accepted step size, or 0 on a stall.
double gradient_step(DiscMesh& mesh, double& step, double armijo_c, double shrink) {
  auto grad = area_gradient(mesh);
  auto mass = vertex_dual_areas(mesh);
  const std::size_t n = mesh.vertices.size();
  std::vector<Vec4> dir(n, Vec4::Zero());
  double descent = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    if (mesh.is_boundary(static_cast<int>(v))) continue;
    const Vec4& p = mesh.vertices[v];
    Vec4 gt = grad[v] - grad[v].dot(p) * p;
    dir[v] = -gt / mass[v];
    descent += gt.squaredNorm() / mass[v];
  }
  if (descent == 0.0) return 0.0;

  double area0 = total_area(mesh);
  double tau = step;
  for (int halving = 0; halving < 48; ++halving) {
    DiscMesh trial = mesh;
    for (std::size_t v = 0; v < n; ++v)
      if (!mesh.is_boundary(static_cast<int>(v)))
        trial.vertices[v] = (mesh.vertices[v] + tau * dir[v]).normalized();
    double area1 = total_area(trial);
    if (area1 <= area0 - armijo_c * tau * descent) {
      mesh = std::move(trial);
      step = std::min(tau * 1.5, 1e3);
      return tau;
    }
    tau *= shrink;
  }
  return 0.0;
}

/// Harmonic replacement: solve the cotan-Laplace system of the current mesh
/// for the interior vertices (each coordinate, Dirichlet boundary), then
/// renormalize onto the sphere.  Near the minimizer this contracts the
/// stationarity residual far faster than first-order steps.
bool harmonic_replacement(DiscMesh& mesh) {
  const std::size_t n = mesh.vertices.size();
  std::vector<int> interior_index(n, -1);
  int ni = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!mesh.is_boundary(static_cast<int>(v))) interior_index[v] = ni++;
  if (ni == 0) return false;

  std::vector<Eigen::Triplet<double>> triplets;
  Eigen::MatrixX4d rhs = Eigen::MatrixX4d::Zero(ni, 4);
  std::vector<double> diag(ni, 0.0);
  std::map<EdgeKey, double> weights;
  for (const auto& t : mesh.triangles) {
    const Vec4 &p = mesh.vertices[t[0]], &q = mesh.vertices[t[1]], &r = mesh.vertices[t[2]];
    double a2 = 2.0 * triangle_area(p, q, r);
    if (a2 < 1e-300) continue;
    weights[edge_key(t[1], t[2])] += 0.5 * (q - p).dot(r - p) / a2;
    weights[edge_key(t[0], t[2])] += 0.5 * (p - q).dot(r - q) / a2;
    weights[edge_key(t[0], t[1])] += 0.5 * (p - r).dot(q - r) / a2;
  }
  for (const auto& [e, w] : weights) {
    int a = e.first, b = e.second;
    int ia = interior_index[a], ib = interior_index[b];
    if (ia >= 0) diag[ia] += w;
    if (ib >= 0) diag[ib] += w;
    if (ia >= 0 && ib >= 0) {
      triplets.emplace_back(ia, ib, -w);
      triplets.emplace_back(ib, ia, -w);
    } else if (ia >= 0) {
      rhs.row(ia) += w * mesh.vertices[b].transpose();
    } else if (ib >= 0) {
      rhs.row(ib) += w * mesh.vertices[a].transpose();
    }
  }
  for (int i = 0; i < ni; ++i) triplets.emplace_back(i, i, diag[i]);

  Eigen::SparseMatrix<double> lap(ni, ni);
  lap.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(lap);
  if (solver.info() != Eigen::Success) return false;
  Eigen::MatrixX4d sol = solver.solve(rhs);
  if (solver.info() != Eigen::Success) return false;

  for (std::size_t v = 0; v < n; ++v)
    if (interior_index[v] >= 0) {
      Vec4 x = sol.row(interior_index[v]).transpose();
      double norm = x.norm();
      if (norm < 1e-8) return false;
      mesh.vertices[v] = x / norm;
    }
  return true;
}

LevelStats solve_at_level(DiscMesh& mesh, const SolveParams& params,
                          std::vector<double>& area_trace) {
  LevelStats stats;
  stats.level = mesh.refinement;
  double step = 0.05;
  int iters = 0;
  for (; iters < params.gradient_iterations; ++iters) {
    if (stationarity_residual(mesh) < params.tolerance) break;
    if (gradient_step(mesh, step, params.armijo_constant, params.armijo_shrink) == 0.0) break;
    area_trace.push_back(total_area(mesh));
  }
  double res = stationarity_residual(mesh);
  for (int outer = 0; outer < params.max_outer_iterations && res >= params.tolerance; ++outer) {
    DiscMesh trial = mesh;
    if (!harmonic_replacement(trial)) break;
    double res_trial = stationarity_residual(trial);
    if (res_trial < res) {
      mesh = std::move(trial);
      res = res_trial;
    } else {
      // Damped fallback when the full replacement overshoots.
      bool accepted = false;
      double tau = 0.5;
      for (int h = 0; h < 12 && !accepted; ++h, tau *= 0.5) {
        DiscMesh damped = mesh;
        for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
          if (!mesh.is_boundary(static_cast<int>(v)))
            damped.vertices[v] =
                ((1 - tau) * mesh.vertices[v] + tau * trial.vertices[v]).normalized();
        double res_damped = stationarity_residual(damped);
        if (res_damped < res) {
          mesh = std::move(damped);
          res = res_damped;
          accepted = true;
        }
      }
      if (!accepted) break;
    }
    ++iters;
    area_trace.push_back(total_area(mesh));
  }

  stats.iterations = iters;
  stats.residual = res;
  stats.area = total_area(mesh);
  stats.total_curvature = disc_total_curvature(mesh);
  stats.converged = res < params.tolerance;
  return stats;
}

}  // namespace

SolveResult solve_plateau(const StandardPrism& prism, int level, SolveParams params) {
  if (prism.Z() > prism.Theta() / 2 + 1e-12)
    throw HypothesisViolated("Plateau solve requires Z <= Theta/2");
  SolveResult result;
  int start = std::min(params.min_level, level);
  DiscMesh mesh = initial_mesh(prism, start);
  for (int l = start; l <= level; ++l) {
    if (l > start) mesh = subdivide(prism, mesh);
    LevelStats stats = solve_at_level(mesh, params, result.area_trace);
    if (params.record_levels) {
      stats.mesh = mesh;
      result.levels.push_back(stats);
    }
    result.iterations += stats.iterations;
    if (l == level) {
      result.residual = stats.residual;
      if (!stats.converged) throw NonConvergence(result.iterations, stats.residual);
    }
  }
  result.mesh = std::move(mesh);
  return result;
}

double max_prism_violation(const StandardPrism& prism, const DiscMesh& mesh) {
  double worst = 0.0;
  for (const auto& v : mesh.vertices) {
    ToroidalCoords c = toroidal_coords(v);
    double excess = std::max({c.r - prism.S(), std::abs(c.z) - prism.Z() / 2,
                              std::sin(c.r) * (std::abs(c.theta) - prism.Theta() / 2), 0.0});
    worst = std::max(worst, excess);
  }
  return worst;
}

namespace {

/// Squared distance from a point to a triangle in R^4 (Eberly-style region
/// classification on the parameter plane).
double point_triangle_dist2(const Vec4& p, const Vec4& a, const Vec4& b, const Vec4& c) {
  Vec4 e0 = b - a, e1 = c - a, d = a - p;
  double a00 = e0.squaredNorm(), a01 = e0.dot(e1), a11 = e1.squaredNorm();
  double b0 = e0.dot(d), b1 = e1.dot(d);
  double det = std::max(a00 * a11 - a01 * a01, 1e-300);
  double s = (a01 * b1 - a11 * b0) / det;
  double t = (a01 * b0 - a00 * b1) / det;
  if (s + t > 1.0) {
    double num = (a11 + b1) - (a01 + b0);
    double denom = a00 - 2 * a01 + a11;
    s = std::clamp(num / std::max(denom, 1e-300), 0.0, 1.0);
    t = 1.0 - s;
  }
  if (s < 0.0) {
    s = 0.0;
    t = std::clamp(-b1 / std::max(a11, 1e-300), 0.0, 1.0);
  } else if (t < 0.0) {
    t = 0.0;
    s = std::clamp(-b0 / std::max(a00, 1e-300), 0.0, 1.0);
  }
  return (a + s * e0 + t * e1 - p).squaredNorm();
}

double directed_hausdorff(const DiscMesh& from, const DiscMesh& to) {
  std::vector<Vec4> centroid(to.triangles.size());
  std::vector<double> radius(to.triangles.size());
  for (std::size_t t = 0; t < to.triangles.size(); ++t) {
    const auto& tri = to.triangles[t];
    centroid[t] = (to.vertices[tri[0]] + to.vertices[tri[1]] + to.vertices[tri[2]]) / 3.0;
    radius[t] = std::max({(to.vertices[tri[0]] - centroid[t]).norm(),
                          (to.vertices[tri[1]] - centroid[t]).norm(),
                          (to.vertices[tri[2]] - centroid[t]).norm()});
  }
  double worst = 0.0;
  for (const auto& p : from.vertices) {
    double best = std::numeric_limits<double>::max();
    for (std::size_t t = 0; t < to.triangles.size(); ++t) {
      double lower = (centroid[t] - p).norm() - radius[t];
      if (lower * lower >= best) continue;
      const auto& tri = to.triangles[t];
      best = std::min(best, point_triangle_dist2(p, to.vertices[tri[0]], to.vertices[tri[1]],
                                                 to.vertices[tri[2]]));
    }
    worst = std::max(worst, std::sqrt(best));
  }
  return worst;
}

}  // namespace

double hausdorff_to_image(const DiscMesh& mesh, const Isometry& iso) {
  DiscMesh image = mesh;
  for (auto& v : image.vertices) v = iso.apply(v);
  return std::max(directed_hausdorff(image, mesh), directed_hausdorff(mesh, image));
}

int orbit_mesh_crossings(const DiscMesh& mesh, const Vec4& x, double cluster_tol) {
  const double bary_tol = 1e-9;
  Vec4 q = x.normalized();
  std::vector<double> hits;
  for (const auto& tri : mesh.triangles) {
    Vec4 a = mesh.vertices[tri[0]].normalized();
    Vec4 b = mesh.vertices[tri[1]].normalized();
    Vec4 c = mesh.vertices[tri[2]].normalized();
    Vec4 n = cross4(a, b, c);
    double nn = n.norm();
    if (nn < 1e-14) continue;
    n /= nn;
    // n . orbit(t) = A cos t + B sin t + C
    double A = n[0] * q[0] + n[2] * q[2];
    double B = n[2] * q[0] - n[0] * q[2];
    double C = n[1] * q[1] + n[3] * q[3];
    double R = std::hypot(A, B);
    if (R < 1e-15) continue;
    double ratio = -C / R;
    if (ratio < -1.0 - 1e-12 || ratio > 1.0 + 1e-12) continue;
    ratio = std::clamp(ratio, -1.0, 1.0);
    double phi = std::atan2(B, A);
    for (double t : {phi + std::acos(ratio), phi - std::acos(ratio)}) {
      Vec4 point = killing_orbit(q, t);
      // Barycentric solve in the triangle's 3-space.
      Eigen::Matrix3d gram;
      Eigen::Vector3d rhsv;
      Vec4 basis[3] = {a, b, c};
      for (int i = 0; i < 3; ++i) {
        rhsv[i] = basis[i].dot(point);
        for (int j = 0; j < 3; ++j) gram(i, j) = basis[i].dot(basis[j]);
      }
      Eigen::Vector3d lambda = gram.ldlt().solve(rhsv);
      if (lambda.minCoeff() < -bary_tol) continue;
      double tt = std::fmod(t, 2 * kPi);
      if (tt < 0) tt += 2 * kPi;
      hits.push_back(tt);
    }
  }
  if (hits.empty()) return 0;
  std::sort(hits.begin(), hits.end());
  int clusters = 1;
  for (std::size_t i = 1; i < hits.size(); ++i)
    if (hits[i] - hits[i - 1] > cluster_tol) ++clusters;
  if (clusters > 1 && (2 * kPi - hits.back()) + hits.front() <= cluster_tol) --clusters;
  return clusters;
}

GraphicalityReport check_graphicality(const DiscMesh& mesh, int samples, std::uint64_t seed) {
  Rng rng(seed + 1);
  std::vector<double> cumulative(mesh.triangles.size());
  double acc = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    acc += triangle_area(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]);
    cumulative[t] = acc;
  }
  GraphicalityReport rep;
  rep.samples = samples;
  rep.min_crossings = samples > 0 ? std::numeric_limits<int>::max() : 0;
  for (int s = 0; s < samples; ++s) {
    double pick = rng.next_double() * acc;
    std::size_t t =
        std::lower_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin();
    t = std::min(t, mesh.triangles.size() - 1);
    double su = std::sqrt(rng.next_double()), v = rng.next_double();
    double l0 = 1 - su, l1 = su * (1 - v), l2 = su * v;
    const auto& tri = mesh.triangles[t];
    Vec4 point = l0 * mesh.vertices[tri[0]] + l1 * mesh.vertices[tri[1]] + l2 * mesh.vertices[tri[2]];
    int crossings = orbit_mesh_crossings(mesh, point);
    rep.max_crossings = std::max(rep.max_crossings, crossings);
    rep.min_crossings = std::min(rep.min_crossings, crossings);
    if (crossings != 1) rep.violations.push_back(point);
  }
  return rep;
}

}  // namespace s3min
