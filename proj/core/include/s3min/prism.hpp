#pragma once

#include "s3min/configuration.hpp"
#include "s3min/s3.hpp"

#include <array>
#include <vector>

namespace s3min {

/// The rotation field along C00 (the one-parameter group fixing the polar
/// circle of C00): K(x) = (-x3, 0, x1, 0) in ambient coordinates.
Vec4 killing(const Vec4& x);
/// Its orbit through x, with killing_orbit(x, 0) = x and d/dt at 0 = K(x).
Vec4 killing_orbit(const Vec4& x, double t);

/// The standard sphericotoral pentahedron: the region of the toroidal chart
/// with r in [0, S], |theta| <= Theta/2, |z| <= Z/2.  Its boundary splits
/// into two rectangles R^- / R^+ on Clifford tori, two triangles T^- / T^+
/// on great spheres, and a parallelogram P on the constant-mean-curvature
/// torus at distance S from C1.
class StandardPrism {
 public:
  StandardPrism(double S, double Theta, double Z);

  double S() const { return s_; }
  double Theta() const { return theta_; }
  double Z() const { return z_; }

  /// Closed-form face parametrizations.  Parameters (a, b) mean:
  ///   T^-/T^+: a = r in [0, S], b = phase of w2 in [-Theta/2, Theta/2]
  ///   P:       a = theta in [-Theta/2, Theta/2], b = z in [-Z/2, Z/2]
  ///   R^-/R^+: a = r in [0, S], b = z in [-Z/2, Z/2]
  Vec4 face_point(FaceTag face, double a, double b) const;
  /// Analytic tangent frame of the parametrization.
  std::pair<Vec4, Vec4> face_partials(FaceTag face, double a, double b) const;
  /// Unit outward normal computed from the tangent frame (4d cross product
  /// against the position, sign fixed by an inward probe).
  Vec4 face_normal(FaceTag face, double a, double b) const;
  /// The closed-form outward normals.
  Vec4 face_normal_closed(FaceTag face, double a, double b) const;
  /// The closed-form values of K . nu on each face.
  double k_dot_normal_closed(FaceTag face, double a, double b) const;

  /// Parameter rectangle of a face, as {a_min, a_max, b_min, b_max}.
  std::array<double, 4> face_param_range(FaceTag face) const;

  bool contains(const Vec4& x, double tol = 1e-9) const;

  /// Hexagon boundary of the Plateau problem: the prism edges except
  /// R^- cap R^+ and P cap T^-/T^+.  Vertices in cyclic order starting at
  /// the apex on C1 with z = +Z/2; edge k runs from vertex k to k+1.
  std::array<Vec4, 6> hexagon_vertices() const;
  /// Constant-speed point on hexagon edge `edge` at t in [0, 1].
  Vec4 hexagon_edge_point(int edge, double t) const;
  /// The great circle containing a hexagon edge.
  GreatCircle hexagon_edge_circle(int edge) const;
  /// Interior angle of the hexagon at vertex k, from exact edge tangents.
  double corner_interior_angle(int corner) const;
  /// Gauss-Bonnet value of the total curvature of the spanning disc,
  /// 2 pi - sum of exterior angles (the edges are geodesics).
  double expected_total_curvature() const;

 private:
  double s_, theta_, z_;
};

/// Entry/exit behavior of the rotation orbits at a boundary point, following
/// the sign of K . nu on each face through the point, with the tangential
/// loci (the apexes on C1, and the two R/T/P corner points in the boundary
/// case S = pi/4, Z = Theta/2) resolved by their known second-order behavior.
struct BoundaryClassification {
  bool entry_k = false;   // forward orbit enters the prism
  bool exit_k = false;    // forward orbit leaves
  bool entry_mk = false;  // backward orbit enters
  bool exit_mk = false;   // backward orbit leaves
  bool tangential = false;
  std::vector<FaceTag> faces;       // faces containing the point
  std::vector<double> k_dot_nu;     // closed-form K . nu per face
};

/// Requires Z <= Theta/2 (HypothesisViolated otherwise) and x on the prism
/// boundary.
BoundaryClassification classify_boundary_point(const StandardPrism& prism, const Vec4& x);
BoundaryClassification classify_boundary_point(const StandardPrism& prism, FaceTag face,
                                               double a, double b);

struct OrbitIntersections {
  int components = 0;
  /// Parameter intervals (t_in, t_out) in [0, 2 pi); a degenerate touching
  /// component has t_in == t_out.
  std::vector<std::pair<double, double>> intervals;
};

/// Connected components of {t : orbit(x, t) in the prism}, by dense sampling
/// refined with bisection.  A degenerate component through t = 0 is seeded
/// when x itself lies in the prism.
OrbitIntersections orbit_prism_intersections(const StandardPrism& prism, const Vec4& x,
                                             int samples = 4096);

}  // namespace s3min
