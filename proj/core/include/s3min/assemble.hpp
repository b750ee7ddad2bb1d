#pragma once

#include "s3min/group.hpp"
#include "s3min/plateau.hpp"

#include <vector>

namespace s3min {

/// Closed surface obtained by replicating a solved disc under a symmetry
/// group and welding coincident boundary vertices.
struct AssembledSurface {
  std::vector<Vec4> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> triangle_copy;   // provenance: copy index per triangle
  std::vector<int> copy_elements;   // group element index per copy
  bool closed = false;
  bool orientable = false;

  std::size_t copy_count() const { return copy_elements.size(); }
};

/// Replicates the disc over the group orbit (one copy per coset of the
/// disc's reflection stabilizer), transforms by `placement` first, and welds
/// boundary vertices within weld_tol.  Throws WeldFailure when a boundary
/// edge fails to pair and NotClosed is recorded in the flags.
AssembledSurface assemble(const DiscMesh& disc, const FiniteGroup& group,
                          const Isometry& placement, double weld_tol = 1e-6);

struct TopologyReport {
  std::size_t vertices = 0, edges = 0, faces = 0;
  int euler_characteristic = 0;
  int genus = 0;
  double total_curvature = 0.0;  // sum of chordal angle defects
  std::size_t copy_count = 0;
};

/// Exact integer topology of the welded complex.  Throws NotClosed unless
/// every edge bounds exactly two triangles.
TopologyReport surface_topology(const AssembledSurface& surface);

/// True if applying g maps the vertex set into itself within tol.
bool vertex_set_invariant(const AssembledSurface& surface, const Isometry& g, double tol);

struct CircleContainment {
  std::vector<double> max_distance;  // per circle, over the sampled points
  double worst = 0.0;
};

/// Max spherical distance from sampled circle points to the radially
/// projected surface; a contained circle gives round-off-sized values.
CircleContainment check_circle_containment(const AssembledSurface& surface,
                                           const std::vector<GreatCircle>& circles,
                                           int samples = 1024);

/// Lower bound for the distance from a circle to the surface (nearest vertex
/// minus the largest triangle radius); used for the negative control.
double circle_distance_lower_bound(const AssembledSurface& surface, const GreatCircle& circle,
                                   int samples = 1024);

/// Counts crossing pairs of spherical triangles from distinct copies that
/// share no welded vertex.  Zero for an embedded mesh-scale surface.
int count_copy_crossings(const AssembledSurface& surface);

}  // namespace s3min
