#pragma once

#include "s3min/group.hpp"
#include "s3min/s3.hpp"

#include <map>
#include <optional>
#include <vector>

namespace s3min {

enum class CircleSet { acol, rcol, scaf };

struct CircleRef {
  CircleSet set = CircleSet::acol;
  int index = -1;
  bool operator==(const CircleRef&) const = default;
  auto operator<=>(const CircleRef&) const = default;
};

/// Indices into Configuration::acol.
enum AxisCircle : int { kC1 = 0, kC1p = 1, kC2 = 2, kC2p = 3, kC3 = 4, kC3p = 5 };

/// Canonical index order of the twelve intersection circles.
enum RcolCircle : int {
  kG12 = 0, kG13 = 1, kG12p = 2, kG13p = 3,
  kG1p2 = 4, kG1p3 = 5, kG1p2p = 6, kG1p3p = 7,
  kG23 = 8, kG23p = 9, kG2p3 = 10, kG2p3p = 11,
};

/// A minimal Clifford torus, recorded by the two polar circles it is
/// equidistant (pi/4) from.
struct Torus {
  int axis_a, axis_b;  // indices into acol
};

enum class FaceTag : int { Rm = 0, Rp = 1, Tm = 2, Tp = 3, P = 4 };

enum class FaceCarrier { clifford_torus, spherical_cap, cap_torus_boundary };

struct FaceRecord {
  FaceTag tag;
  FaceCarrier carrier;
  /// clifford_torus: torus index; spherical_cap: axis circle; boundary: axis circle.
  int carrier_index = -1;
  /// spherical_cap only: which point slot of ptcol the cap sits at.
  int carrier_slot = -1;
};

struct PrismEdgeRecord {
  CircleRef circle;        // carrying great circle in rcol or scaf
  Vec4 endpoints[2];
  Vec4 midpoint;
  int shared_edge = -1;    // index into Configuration::shared_edges
};

/// One member of the prism tessellation: the image of the standard prism
/// Omega_{pi/8, pi/2, pi/N} under `placement`.
struct Prism {
  int axis_circle;  // acol index of the solid torus it tiles
  int j, l;         // slot indices: j in [0, 2N), l in [0, 4)
  Isometry placement = Isometry::identity();
  GreatCircle axis;  // L_Omega
  S3Point center;
  std::array<FaceRecord, 5> faces;
  std::array<PrismEdgeRecord, 6> edges;
};

struct SharedEdge {
  CircleRef circle;
  Vec4 midpoint;
  std::vector<int> prisms;  // exactly 4 in a full configuration
};

/// The full named configuration for a given scaffolding count N: the three
/// Clifford tori, the six intersection circles and their solid tori, the
/// twelve boundary-intersection circles, the 3N scaffolding circles, the
/// marked points, and the 48N prisms.
struct Configuration {
  int N = 0;
  bool full = false;  // true iff N divisible by 4 (prisms built)
  std::array<Torus, 3> tori{};
  std::vector<GreatCircle> acol;                // 6
  std::vector<GreatCircle> rcol;                // 12
  std::vector<GreatCircle> scaf;                // 3N (2N if N == 2 mod 4)
  std::vector<int> scaf_torus;                  // torus index per scaf circle
  std::vector<std::vector<S3Point>> ptcol;      // per acol circle, 2N points
  std::vector<Prism> prisms;                    // 48N
  std::vector<SharedEdge> shared_edges;

  const GreatCircle& circle(CircleRef ref) const;
  int prism_index(int axis_circle, int j, int l) const;
  /// Prism whose center is within tol of x, or -1.
  int find_prism_by_center(const Vec4& x, double tol = 1e-8) const;

  /// Standard prism parameters of the tessellation members.
  double S() const { return kPi / 8; }
  double Theta() const { return kPi / 2; }
  double Z() const { return kPi / N; }
};

/// Builds the explicit configuration.  N must be even; the scaffolding on
/// the first torus and the prisms additionally require N divisible by 4.
Configuration build_configuration(int N);

/// Reflection generators of the symmetry group: one per circle of
/// scaf (in listing order) then rcol.
std::vector<Isometry> symmetry_generators(const Configuration& cfg);

/// The full symmetry group generated by the scaffolding and intersection
/// circle reflections; cap defaults to 64N + 64 (just above the expected 48N).
FiniteGroup symmetry_group(const Configuration& cfg, std::size_t cap = 0);

/// The four prisms sharing the edge with the given midpoint.  Throws
/// NotAPrismEdge if no prism edge midpoint matches within tol.
const SharedEdge& shared_edge_prisms(const Configuration& cfg, const Vec4& edge_midpoint,
                                     double tol = 1e-8);
const SharedEdge& shared_edge_prisms(const Configuration& cfg, int prism, int local_edge);

/// A two-coloring of the prisms.
struct Coloring {
  std::vector<std::uint8_t> values;  // one per prism
};

struct ColoringResult {
  std::optional<Coloring> coloring;
  /// On failure: a short cycle of prism indices whose constraints contradict.
  std::vector<int> witness;
  bool consistent() const { return coloring.has_value(); }
};

/// Breadth-first propagation of the edge-consistency constraint from the
/// seed.  Inconsistency is reported as a structured result, not an error.
ColoringResult propagate_coloring(const Configuration& cfg, int seed_prism,
                                  std::uint8_t seed_value);

/// Checks every pairwise constraint of the consistency definition.
bool coloring_consistent(const Configuration& cfg, const Coloring& c);

struct DualityReport {
  bool ok = false;
  std::size_t orbit_size_0 = 0, orbit_size_1 = 0;
  bool level_sets_are_orbits = false;
  bool composed_colorings_consistent = false;
};

/// Confirms the coloring level sets are exactly the two group orbits of
/// prisms (each of size 24N), and that c o g stays consistent for generators.
DualityReport verify_orbit_coloring_duality(const Configuration& cfg, const FiniteGroup& g,
                                            const Coloring& c);

}  // namespace s3min
