#include "s3min/prism.hpp"

#include "s3min/errors.hpp"

#include <algorithm>
#include <cmath>

namespace s3min {

Vec4 killing(const Vec4& x) { return Vec4(-x[2], 0.0, x[0], 0.0); }

Vec4 killing_orbit(const Vec4& x, double t) {
  double c = std::cos(t), s = std::sin(t);
  return Vec4(x[0] * c - x[2] * s, x[1], x[0] * s + x[2] * c, x[3]);
}

StandardPrism::StandardPrism(double S, double Theta, double Z) : s_(S), theta_(Theta), z_(Z) {
  if (!(S > 0 && S <= kPi / 4 + 1e-12) || !(Theta > 0 && Theta <= kPi / 2 + 1e-12) ||
      !(Z > 0 && Z <= kPi / 4 + 1e-12))
    throw Error("prism parameters out of range");
}

Vec4 StandardPrism::face_point(FaceTag face, double a, double b) const {
  switch (face) {
    case FaceTag::Tm:
    case FaceTag::Tp: {
      double sgn = (face == FaceTag::Tp) ? 1.0 : -1.0;
      return Vec4(std::cos(z_ / 2) * std::cos(a), sgn * std::sin(z_ / 2) * std::cos(a),
                  std::cos(b) * std::sin(a), std::sin(b) * std::sin(a));
    }
    case FaceTag::P:
      return Vec4(std::cos(s_) * std::cos(b), std::cos(s_) * std::sin(b),
                  std::sin(s_) * std::cos(b + a), std::sin(s_) * std::sin(b + a));
    case FaceTag::Rm:
    case FaceTag::Rp: {
      double half = (face == FaceTag::Rp) ? theta_ / 2 : -theta_ / 2;
      return Vec4(std::cos(a) * std::cos(b), std::cos(a) * std::sin(b),
                  std::sin(a) * std::cos(b + half), std::sin(a) * std::sin(b + half));
    }
  }
  throw UnknownFaceTag("bad face tag");
}

std::pair<Vec4, Vec4> StandardPrism::face_partials(FaceTag face, double a, double b) const {
  switch (face) {
    case FaceTag::Tm:
    case FaceTag::Tp: {
      double sgn = (face == FaceTag::Tp) ? 1.0 : -1.0;
      Vec4 da(-std::cos(z_ / 2) * std::sin(a), -sgn * std::sin(z_ / 2) * std::sin(a),
              std::cos(b) * std::cos(a), std::sin(b) * std::cos(a));
      Vec4 db(0, 0, -std::sin(b) * std::sin(a), std::cos(b) * std::sin(a));
      return {da, db};
    }
    case FaceTag::P: {
      Vec4 da(0, 0, -std::sin(s_) * std::sin(b + a), std::sin(s_) * std::cos(b + a));
      Vec4 db(-std::cos(s_) * std::sin(b), std::cos(s_) * std::cos(b),
              -std::sin(s_) * std::sin(b + a), std::sin(s_) * std::cos(b + a));
      return {da, db};
    }
    case FaceTag::Rm:
    case FaceTag::Rp: {
      double half = (face == FaceTag::Rp) ? theta_ / 2 : -theta_ / 2;
      Vec4 da(-std::sin(a) * std::cos(b), -std::sin(a) * std::sin(b),
              std::cos(a) * std::cos(b + half), std::cos(a) * std::sin(b + half));
      Vec4 db(-std::cos(a) * std::sin(b), std::cos(a) * std::cos(b),
              -std::sin(a) * std::sin(b + half), std::sin(a) * std::cos(b + half));
      return {da, db};
    }
  }
  throw UnknownFaceTag("bad face tag");
}

namespace {

/// Chart coordinates of the paper parameters, for the inward probe.
struct ChartCoords {
  double r, theta, z;
};

ChartCoords face_chart(const StandardPrism& p, FaceTag face, double a, double b) {
  switch (face) {
    case FaceTag::Tm:
      return {a, b + p.Z() / 2, -p.Z() / 2};
    case FaceTag::Tp:
      return {a, b - p.Z() / 2, p.Z() / 2};
    case FaceTag::P:
      return {p.S(), a, b};
    case FaceTag::Rm:
      return {a, -p.Theta() / 2, b};
    case FaceTag::Rp:
      return {a, p.Theta() / 2, b};
  }
  throw UnknownFaceTag("bad face tag");
}

}  // namespace

Vec4 StandardPrism::face_normal(FaceTag face, double a, double b) const {
  Vec4 p = face_point(face, a, b);
  auto [da, db] = face_partials(face, a, b);
  Vec4 n = cross4(p, da, db);
  double len = n.norm();
  if (len < 1e-13) throw Error("degenerate tangent frame (face parametrization singular here)");
  n /= len;
  // Orient outward: against a probe displaced slightly into the prism.
  ChartCoords c = face_chart(*this, face, a, b);
  const double delta = 1e-3;
  auto clamp_in = [delta](double x, double lo, double hi) {
    return std::clamp(x, lo + delta, hi - delta);
  };
  Vec4 inward = toroidal_point(clamp_in(c.r, 0.0, s_), clamp_in(c.theta, -theta_ / 2, theta_ / 2),
                               clamp_in(c.z, -z_ / 2, z_ / 2));
  if (n.dot(inward - p) > 0) n = -n;
  return n;
}

Vec4 StandardPrism::face_normal_closed(FaceTag face, double a, double b) const {
  switch (face) {
    case FaceTag::Tm:
    case FaceTag::Tp: {
      double sgn = (face == FaceTag::Tp) ? 1.0 : -1.0;
      return Vec4(-std::sin(z_ / 2), sgn * std::cos(z_ / 2), 0, 0);
    }
    case FaceTag::P:
      return Vec4(-std::sin(s_) * std::cos(b), -std::sin(s_) * std::sin(b),
                  std::cos(s_) * std::cos(b + a), std::cos(s_) * std::sin(b + a));
    case FaceTag::Rm:
    case FaceTag::Rp: {
      double sgn = (face == FaceTag::Rp) ? 1.0 : -1.0;
      double half = sgn * theta_ / 2;
      return Vec4(sgn * std::sin(a) * std::sin(b), -sgn * std::sin(a) * std::cos(b),
                  -sgn * std::cos(a) * std::sin(b + half), sgn * std::cos(a) * std::cos(b + half));
    }
  }
  throw UnknownFaceTag("bad face tag");
}

double StandardPrism::k_dot_normal_closed(FaceTag face, double a, double b) const {
  switch (face) {
    case FaceTag::Tm:
    case FaceTag::Tp:
      return std::sin(z_ / 2) * std::sin(a) * std::cos(b);
    case FaceTag::P:
      return std::cos(b) * std::cos(b + a);
    case FaceTag::Rm:
    case FaceTag::Rp: {
      double sgn = (face == FaceTag::Rp) ? 1.0 : -1.0;
      double cr = std::cos(a);
      return -(cr * cr * std::sin(theta_ / 2) + sgn * std::sin(b) * std::cos(b + sgn * theta_ / 2));
    }
  }
  throw UnknownFaceTag("bad face tag");
}

std::array<double, 4> StandardPrism::face_param_range(FaceTag face) const {
  switch (face) {
    case FaceTag::Tm:
    case FaceTag::Tp:
      return {0, s_, -theta_ / 2, theta_ / 2};
    case FaceTag::P:
      return {-theta_ / 2, theta_ / 2, -z_ / 2, z_ / 2};
    case FaceTag::Rm:
    case FaceTag::Rp:
      return {0, s_, -z_ / 2, z_ / 2};
  }
  throw UnknownFaceTag("bad face tag");
}

bool StandardPrism::contains(const Vec4& x, double tol) const {
  ToroidalCoords c = toroidal_coords(x);
  if (c.r > s_ + tol) return false;
  if (std::abs(c.z) > z_ / 2 + tol) return false;
  // The theta excess enters the distance to the prism scaled by sin r, which
  // keeps the test meaningful arbitrarily close to C1.
  double theta_excess = std::max(0.0, std::abs(c.theta) - theta_ / 2);
  if (std::sin(c.r) * theta_excess > tol) return false;
  return true;
}

namespace {

// Hexagon edges in chart coordinates (r, theta, z), constant speed in t.
struct EdgeChart {
  double a[3], b[3];
};

std::array<EdgeChart, 6> hexagon_edges(double S, double Theta, double Z) {
  return {{
      {{0, Theta / 2, Z / 2}, {S, Theta / 2, Z / 2}},      // apex+ -> corner(+,+)
      {{S, Theta / 2, Z / 2}, {S, Theta / 2, -Z / 2}},     // corner(+,+) -> corner(+,-)
      {{S, Theta / 2, -Z / 2}, {0, Theta / 2, -Z / 2}},    // corner(+,-) -> apex-
      {{0, -Theta / 2, -Z / 2}, {S, -Theta / 2, -Z / 2}},  // apex- -> corner(-,-)
      {{S, -Theta / 2, -Z / 2}, {S, -Theta / 2, Z / 2}},   // corner(-,-) -> corner(-,+)
      {{S, -Theta / 2, Z / 2}, {0, -Theta / 2, Z / 2}},    // corner(-,+) -> apex+
  }};
}

Vec4 chart_partial_r(double r, double theta, double z) {
  return Vec4(-std::sin(r) * std::cos(z), -std::sin(r) * std::sin(z),
              std::cos(r) * std::cos(theta + z), std::cos(r) * std::sin(theta + z));
}

Vec4 chart_partial_z(double r, double theta, double z) {
  return Vec4(-std::cos(r) * std::sin(z), std::cos(r) * std::cos(z),
              -std::sin(r) * std::sin(theta + z), std::sin(r) * std::cos(theta + z));
}

}  // namespace

std::array<Vec4, 6> StandardPrism::hexagon_vertices() const {
  auto edges = hexagon_edges(s_, theta_, z_);
  std::array<Vec4, 6> v;
  for (int k = 0; k < 6; ++k) v[k] = toroidal_point(edges[k].a[0], edges[k].a[1], edges[k].a[2]);
  return v;
}

Vec4 StandardPrism::hexagon_edge_point(int edge, double t) const {
  const auto e = hexagon_edges(s_, theta_, z_)[edge];
  return toroidal_point(e.a[0] + t * (e.b[0] - e.a[0]), e.a[1] + t * (e.b[1] - e.a[1]),
                        e.a[2] + t * (e.b[2] - e.a[2]));
}

GreatCircle StandardPrism::hexagon_edge_circle(int edge) const {
  Vec4 a = hexagon_edge_point(edge, 0.0), b = hexagon_edge_point(edge, 1.0);
  Vec4 w = b - a.dot(b) * a;
  double n = w.norm();
  if (n < 1e-12) throw Error("degenerate hexagon edge");
  return GreatCircle(a, Vec4(w / n));
}

double StandardPrism::corner_interior_angle(int corner) const {
  auto edges = hexagon_edges(s_, theta_, z_);
  // Edge (corner-1) arrives at the corner; edge (corner) leaves from it.
  int in = (corner + 5) % 6, out = corner;
  auto tangent = [&](const EdgeChart& e, bool at_start) {
    double t = at_start ? 0.0 : 1.0;
    double r = e.a[0] + t * (e.b[0] - e.a[0]);
    double theta = e.a[1] + t * (e.b[1] - e.a[1]);
    double z = e.a[2] + t * (e.b[2] - e.a[2]);
    Vec4 d = (e.b[0] - e.a[0]) * chart_partial_r(r, theta, z) +
             (e.b[2] - e.a[2]) * chart_partial_z(r, theta, z);
    return Vec4(d.normalized());
  };
  Vec4 ta = -tangent(edges[in], false);  // away from the corner, back along the arriving edge
  Vec4 tb = tangent(edges[out], true);
  return std::acos(std::clamp(ta.dot(tb), -1.0, 1.0));
}

double StandardPrism::expected_total_curvature() const {
  double ext = 0.0;
  for (int k = 0; k < 6; ++k) ext += kPi - corner_interior_angle(k);
  return 2 * kPi - ext;
}

namespace {

void apply_tangential_resolution(const StandardPrism& p, const ToroidalCoords& c,
                                 BoundaryClassification& out) {
  const double tol = 1e-9;
  // Apex points on C1 (the prism's edge on C1 meets T^- / T^+ at r = 0):
  // the orbit is tangent to the great sphere there but curves away from the
  // prism, an exit for both directions.
  if (c.r < tol && std::abs(std::abs(c.z) - p.Z() / 2) < tol) {
    out.exit_k = true;
    out.exit_mk = true;
    out.tangential = true;
  }
  // Corner points R^+- cap T^-+ cap P in the boundary case S = pi/4,
  // Z = Theta/2: tangent to the Clifford torus, second-order exit for -K.
  if (std::abs(p.S() - kPi / 4) < tol && std::abs(p.Z() - p.Theta() / 2) < tol &&
      std::abs(c.r - p.S()) < tol && std::abs(std::abs(c.z) - p.Z() / 2) < tol &&
      std::abs(std::abs(c.theta) - p.Theta() / 2) < tol) {
    out.exit_mk = true;
    out.tangential = true;
  }
}

}  // namespace

BoundaryClassification classify_boundary_point(const StandardPrism& prism, const Vec4& x) {
  if (prism.Z() > prism.Theta() / 2 + 1e-12)
    throw HypothesisViolated("orbit analysis requires Z <= Theta/2");
  const double tol = 1e-9;
  ToroidalCoords c = toroidal_coords(x);
  if (!prism.contains(x, tol)) throw Error("point is not on the prism boundary");

  BoundaryClassification out;
  auto add_face = [&](FaceTag face, double a, double b) {
    out.faces.push_back(face);
    out.k_dot_nu.push_back(prism.k_dot_normal_closed(face, a, b));
  };

  if (c.r < tol) {
    // On the spine arc of C1: part of both rectangles.
    add_face(FaceTag::Rm, 0.0, c.z);
    add_face(FaceTag::Rp, 0.0, c.z);
  } else {
    if (std::abs(c.theta + prism.Theta() / 2) < tol) add_face(FaceTag::Rm, c.r, c.z);
    if (std::abs(c.theta - prism.Theta() / 2) < tol) add_face(FaceTag::Rp, c.r, c.z);
  }
  if (std::abs(c.z + prism.Z() / 2) < tol)
    add_face(FaceTag::Tm, c.r, c.theta + c.z);  // paper parameter is the w2 phase
  if (std::abs(c.z - prism.Z() / 2) < tol) add_face(FaceTag::Tp, c.r, c.theta + c.z);
  if (std::abs(c.r - prism.S()) < tol) add_face(FaceTag::P, c.theta, c.z);

  if (out.faces.empty()) throw Error("point is interior to the prism, not on its boundary");

  const double sign_tol = 1e-13;
  bool any_pos = false, any_neg = false, any_zero = false;
  for (double v : out.k_dot_nu) {
    if (v > sign_tol) any_pos = true;
    else if (v < -sign_tol) any_neg = true;
    else any_zero = true;
  }
  out.exit_k = any_pos;
  out.exit_mk = any_neg;
  out.entry_k = any_neg && !any_pos && !any_zero;
  out.entry_mk = any_pos && !any_neg && !any_zero;
  out.tangential = any_zero;
  apply_tangential_resolution(prism, c, out);
  return out;
}

BoundaryClassification classify_boundary_point(const StandardPrism& prism, FaceTag face,
                                               double a, double b) {
  auto range = prism.face_param_range(face);
  if (a < range[0] - 1e-12 || a > range[1] + 1e-12 || b < range[2] - 1e-12 ||
      b > range[3] + 1e-12)
    throw Error("face parameters out of range");
  return classify_boundary_point(prism, prism.face_point(face, a, b));
}

OrbitIntersections orbit_prism_intersections(const StandardPrism& prism, const Vec4& x,
                                             int samples) {
  const double period = 2 * kPi;
  auto inside = [&](double t) { return prism.contains(killing_orbit(x, t)); };

  std::vector<char> in(samples);
  for (int i = 0; i < samples; ++i) in[i] = inside(period * i / samples) ? 1 : 0;

  auto refine = [&](double lo, double hi, bool lo_inside) {
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      if (inside(mid) == lo_inside)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  struct Crossing {
    double t;
    bool entering;
  };
  std::vector<Crossing> crossings;
  for (int i = 0; i < samples; ++i) {
    bool a = in[i], b = in[(i + 1) % samples];
    if (a == b) continue;
    double t = refine(period * i / samples, period * (i + 1) / samples, a);
    crossings.push_back({t, b});
  }

  OrbitIntersections out;
  if (crossings.empty()) {
    if (in[0]) {
      out.components = 1;
      out.intervals.push_back({0.0, period});
    } else if (prism.contains(x)) {
      // Degenerate touching component through the seed point itself.
      out.components = 1;
      out.intervals.push_back({0.0, 0.0});
    }
    return out;
  }

  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
  const std::size_t n = crossings.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!crossings[i].entering) continue;
    const Crossing& exit = crossings[(i + 1) % n];
    out.intervals.push_back({crossings[i].t, exit.t});
  }
  out.components = static_cast<int>(out.intervals.size());

  if (prism.contains(x)) {
    bool covered = false;
    for (auto& [a, b] : out.intervals) {
      bool wraps = a > b;
      if ((!wraps && a - 1e-6 <= 0.0 && 0.0 <= b + 1e-6) ||
          (wraps && (0.0 >= a - 1e-6 || 0.0 <= b + 1e-6)) ||
          a < 1e-6 || b > period - 1e-6)
        covered = true;
    }
    if (!covered) {
      out.intervals.push_back({0.0, 0.0});
      ++out.components;
    }
  }
  return out;
}

}  // namespace s3min
