#pragma once

#include "s3min/prism.hpp"
#include "s3min/s3.hpp"

#include <optional>
#include <vector>

namespace s3min {

/// Triangle mesh spanning the hexagon boundary, vertices constrained to the
/// 3-sphere.  Tags: -1 interior, 0..5 interior of hexagon edge k, 6+k the
/// hexagon corner k.
struct DiscMesh {
  std::vector<Vec4> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> vertex_tag;
  std::vector<double> vertex_param;  // arc parameter for edge vertices
  int refinement = 0;

  bool is_boundary(int v) const { return vertex_tag[v] >= 0; }
  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t triangle_count() const { return triangles.size(); }
};

/// Euler characteristic V - E + F of the triangle complex.
int euler_characteristic(const DiscMesh& mesh);
/// Number of closed boundary loops (edges adjacent to exactly one triangle).
int boundary_loop_count(const DiscMesh& mesh);

double total_area(const DiscMesh& mesh);
/// Gradient of the chordal area with respect to each vertex position.
std::vector<Vec4> area_gradient(const DiscMesh& mesh);
/// One third of the incident triangle area, per vertex.
std::vector<double> vertex_dual_areas(const DiscMesh& mesh);

/// Sum of angle defects 2 pi - (angle sum) over interior vertices; converges
/// to the total Gauss curvature of the disc under refinement.
double disc_total_curvature(const DiscMesh& mesh);

/// Max over interior vertices of |tangential area gradient| / dual area.
double stationarity_residual(const DiscMesh& mesh);

/// Fan mesh over the hexagon subdivided `level` times, interior initialized
/// by a transfinite blend of the boundary arcs in the (r, theta, z) chart.
DiscMesh initial_mesh(const StandardPrism& prism, int level);

/// 1 -> 4 subdivision; new boundary vertices take exact arc positions, new
/// interior vertices chordal midpoints reprojected to the sphere.
DiscMesh subdivide(const StandardPrism& prism, const DiscMesh& mesh);

struct SolveParams {
  int gradient_iterations = 120;   // Armijo-backtracked descent phase
  int max_outer_iterations = 400;  // harmonic-replacement phase
  double tolerance = 1e-8;         // stationarity residual target
  double armijo_constant = 1e-4;
  double armijo_shrink = 0.5;
  int min_level = 2;               // coarsest level of the hierarchy
  bool record_levels = true;
};

struct LevelStats {
  int level = 0;
  int iterations = 0;
  double residual = 0.0;
  double area = 0.0;
  double total_curvature = 0.0;
  bool converged = false;
  DiscMesh mesh;
};

struct SolveResult {
  DiscMesh mesh;
  std::vector<LevelStats> levels;
  int iterations = 0;
  double residual = 0.0;
  /// Area after every accepted iteration, for the monotonicity property.
  std::vector<double> area_trace;
};

/// Solves the Plateau problem for the hexagon boundary of the prism by
/// minimizing chordal triangle area with vertices constrained to the sphere,
/// refining hierarchically up to `level`.  Throws NonConvergence if the
/// stationarity residual cannot be met.
SolveResult solve_plateau(const StandardPrism& prism, int level, SolveParams params = {});

/// Max vertex distance to the prism region (post-hoc containment check).
double max_prism_violation(const StandardPrism& prism, const DiscMesh& mesh);

/// Symmetric vertex-to-surface Hausdorff distance between the mesh and its
/// image under the isometry.
double hausdorff_to_image(const DiscMesh& mesh, const Isometry& iso);

/// Number of transversal crossings of the rotation orbit through x with the
/// radially projected (spherical) mesh; crossing points closer than
/// cluster_tol in parameter are counted once.
int orbit_mesh_crossings(const DiscMesh& mesh, const Vec4& x, double cluster_tol = 1e-6);

struct GraphicalityReport {
  int samples = 0;
  int max_crossings = 0;
  int min_crossings = 0;
  std::vector<Vec4> violations;  // sample points whose orbit crossed != once
  bool graphical() const { return max_crossings == 1 && min_crossings == 1; }
};

/// Samples random points on the mesh and counts orbit crossings; the solved
/// disc should meet every such orbit exactly once.
GraphicalityReport check_graphicality(const DiscMesh& mesh, int samples, std::uint64_t seed = 0);

}  // namespace s3min
