#pragma once

#include "s3min/errors.hpp"
#include "s3min/linalg.hpp"

namespace s3min {

/// A point of the unit 3-sphere, identified with a pair of complex numbers
/// (x0 + i x1, x2 + i x3) of unit total modulus.
class S3Point {
 public:
  explicit S3Point(const Vec4& x);
  S3Point(Complex w1, Complex w2) : S3Point(from_c2(w1, w2)) {}

  /// Radially project an arbitrary nonzero vector onto the sphere.
  static S3Point normalized(const Vec4& x);

  const Vec4& vec() const { return x_; }
  double operator[](int i) const { return x_[i]; }
  Complex w1() const { return Complex(x_[0], x_[1]); }
  Complex w2() const { return Complex(x_[2], x_[3]); }

 private:
  Vec4 x_;
};

/// A point of the round 2-sphere of radius 1/2, the target of the Hopf map.
class S2Point {
 public:
  explicit S2Point(const Vec3& y);
  const Vec3& vec() const { return y_; }
  double operator[](int i) const { return y_[i]; }

 private:
  Vec3 y_;
};

/// An oriented great circle: an orthonormal basis (u, v) of its 2-plane plus
/// an ordered orthonormal basis (pu, pv) of the orthogonal complement.  The
/// complement basis fixes the sense of rot along the polar circle; reflections
/// do not depend on it.
class GreatCircle {
 public:
  /// Canonical orientation: the complement basis is the Gram-Schmidt
  /// completion of (u, v) by the first independent coordinate axes.
  GreatCircle(const Vec4& u, const Vec4& v);
  GreatCircle(const Vec4& u, const Vec4& v, const Vec4& pu, const Vec4& pv);

  /// The Hopf fiber through (a, b), i.e. the circle {e^{is}(a, b)}.
  static GreatCircle fiber(Complex a, Complex b);

  const Vec4& u() const { return u_; }
  const Vec4& v() const { return v_; }
  const Vec4& perp_u() const { return pu_; }
  const Vec4& perp_v() const { return pv_; }

  Vec4 point(double s) const { return std::cos(s) * u_ + std::sin(s) * v_; }

  /// Orthogonal projector onto the circle's 2-plane.
  Mat4 projector() const;

  /// The polar circle, at constant distance pi/2, oriented so that taking
  /// perp twice returns the original orientation data.
  GreatCircle perp() const { return GreatCircle(pu_, pv_, u_, v_); }

  bool same_circle(const GreatCircle& o, double tol = 1e-9) const;

 private:
  Vec4 u_, v_, pu_, pv_;
};

enum class IsometryKind { unitary, antiunitary, neither };

/// An isometry of the 3-sphere: an orthogonal 4x4 matrix, classified by its
/// relation to the standard complex structure.
class Isometry {
 public:
  static Isometry from_matrix(const Mat4& m);
  /// The complex-linear map with matrix [[a, b], [c, d]] acting on (w1, w2).
  static Isometry from_u2(Complex a, Complex b, Complex c, Complex d);
  static Isometry identity();

  const Mat4& mat() const { return m_; }
  IsometryKind kind() const { return kind_; }

  Vec4 apply(const Vec4& x) const { return m_ * x; }
  S3Point apply(const S3Point& p) const { return S3Point(m_ * p.vec()); }
  GreatCircle apply(const GreatCircle& c) const;

  Isometry operator*(const Isometry& o) const;
  Isometry inverse() const;

 private:
  Isometry(const Mat4& m, IsometryKind k) : m_(m), kind_(k) {}
  Mat4 m_;
  IsometryKind kind_;
};

IsometryKind classify_kind(const Mat4& m, double tol = kMatTol);

/// Hopf projection (w1, w2) -> (Re w1 conj(w2), Im w1 conj(w2), (|w1|^2-|w2|^2)/2).
S2Point hopf_project(const S3Point& p);
Vec3 hopf_project(const Vec4& x);

/// Rotation fixing C pointwise and rotating its polar circle through angle t,
/// in the sense given by C's complement orientation.
Isometry rot(const GreatCircle& c, double t);

/// Reflection through C (= rot by pi; independent of orientation data).
Isometry refl(const GreatCircle& c);

/// Geodesic distance from p to the circle C, in [0, pi/2].
double dist_to_circle(const GreatCircle& c, const Vec4& p);
inline double dist_to_circle(const GreatCircle& c, const S3Point& p) {
  return dist_to_circle(c, p.vec());
}

/// The unique element R of O(3) with hopf o T = R o hopf.  Throws
/// NonFiberPreservingElement unless T is unitary or antiunitary.
Mat3 project_o3(const Isometry& t);

/// Distinguished circles: C1 = {(e^{is}, 0)} and its polar circle,
/// oriented as in the standard conventions (rot_C1^s multiplies w2 by e^{is}).
GreatCircle circle_c1();
GreatCircle circle_c1_perp();
/// C00 = {(cos r, sin r)} and its polar circle C^{pi/2}_{pi/2}.
GreatCircle circle_c00();
GreatCircle circle_c00_perp();

/// Haar-ish random elements, for property tests.
Isometry random_unitary(Rng& rng);
Isometry random_antiunitary(Rng& rng);

/// Toroidal chart around C1: (r, theta, z) -> e^{iz}(cos r, e^{i theta} sin r).
/// r is the distance to C1.
Vec4 toroidal_point(double r, double theta, double z);

struct ToroidalCoords {
  double r, theta, z;
};
/// Inverse chart; theta is meaningless at r = 0 and z at r = pi/2.
ToroidalCoords toroidal_coords(const Vec4& x);

}  // namespace s3min
