#include "s3min/s3.hpp"

#include <algorithm>

namespace s3min {

Mat4 complex_linear(Complex a, Complex b, Complex c, Complex d) {
  Mat4 m;
  auto block = [&](int r, int col, Complex z) {
    m(r, col) = z.real();
    m(r, col + 1) = -z.imag();
    m(r + 1, col) = z.imag();
    m(r + 1, col + 1) = z.real();
  };
  block(0, 0, a);
  block(0, 2, b);
  block(2, 0, c);
  block(2, 2, d);
  return m;
}

const Mat4& complex_structure() {
  static const Mat4 j = complex_linear(Complex(0, 1), 0, 0, Complex(0, 1));
  return j;
}

const Mat4& conjugation() {
  static const Mat4 c = [] {
    Mat4 m = Mat4::Identity();
    m(1, 1) = -1.0;
    m(3, 3) = -1.0;
    return m;
  }();
  return c;
}

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  // Hodge dual of a ^ b ^ c: expand det [e; a; b; c] along the first row.
  auto minor3 = [&](int i, int j, int k) {
    return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
           a[k] * (b[i] * c[j] - b[j] * c[i]);
  };
  Vec4 d;
  d[0] = minor3(1, 2, 3);
  d[1] = -minor3(0, 2, 3);
  d[2] = minor3(0, 1, 3);
  d[3] = -minor3(0, 1, 2);
  return d;
}

MatKey mat_key(const Mat4& m, double scale) {
  MatKey k;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) k[4 * r + c] = quantize(m(r, c), scale);
  return k;
}

Vec4 Rng::next_s3() {
  // Marsaglia-style rejection in the 4-cube.
  for (;;) {
    Vec4 x(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    double n2 = x.squaredNorm();
    if (n2 > 1e-12 && n2 <= 1.0) return x / std::sqrt(n2);
  }
}

S3Point::S3Point(const Vec4& x) : x_(x) {
  if (std::abs(x.norm() - 1.0) > kPointTol)
    throw InvalidPoint("point is not on the unit 3-sphere");
}

S3Point S3Point::normalized(const Vec4& x) {
  double n = x.norm();
  if (n < 1e-14) throw InvalidPoint("cannot project the origin to the sphere");
  return S3Point(Vec4(x / n));
}

S2Point::S2Point(const Vec3& y) : y_(y) {
  if (std::abs(y.norm() - 0.5) > kPointTol)
    throw InvalidPoint("point is not on the radius-1/2 2-sphere");
}

namespace {

void check_orthonormal_pair(const Vec4& u, const Vec4& v) {
  if (std::abs(u.norm() - 1.0) > 1e-9 || std::abs(v.norm() - 1.0) > 1e-9 ||
      std::abs(u.dot(v)) > 1e-9)
    throw InvalidCircle("great-circle basis is not orthonormal");
}

}  // namespace

GreatCircle::GreatCircle(const Vec4& u, const Vec4& v) : u_(u), v_(v) {
  check_orthonormal_pair(u, v);
  // Gram-Schmidt completion by coordinate axes, first independent ones win.
  Vec4 basis[2];
  int found = 0;
  for (int axis = 0; axis < 4 && found < 2; ++axis) {
    Vec4 e = Vec4::Zero();
    e[axis] = 1.0;
    Vec4 w = e - u_.dot(e) * u_ - v_.dot(e) * v_;
    for (int k = 0; k < found; ++k) w -= basis[k].dot(w) * basis[k];
    double n = w.norm();
    if (n > 1e-6) basis[found++] = w / n;
  }
  if (found != 2) throw InvalidCircle("failed to complete complement basis");
  pu_ = basis[0];
  pv_ = basis[1];
}

GreatCircle::GreatCircle(const Vec4& u, const Vec4& v, const Vec4& pu, const Vec4& pv)
    : u_(u), v_(v), pu_(pu), pv_(pv) {
  check_orthonormal_pair(u, v);
  check_orthonormal_pair(pu, pv);
  if (std::abs(u.dot(pu)) > 1e-9 || std::abs(u.dot(pv)) > 1e-9 ||
      std::abs(v.dot(pu)) > 1e-9 || std::abs(v.dot(pv)) > 1e-9)
    throw InvalidCircle("complement basis is not orthogonal to the circle plane");
}

GreatCircle GreatCircle::fiber(Complex a, Complex b) {
  Vec4 u = from_c2(a, b);
  Vec4 v = from_c2(Complex(0, 1) * a, Complex(0, 1) * b);
  double n = u.norm();
  if (n < 1e-14) throw InvalidCircle("zero fiber datum");
  return GreatCircle(Vec4(u / n), Vec4(v / n));
}

Mat4 GreatCircle::projector() const {
  return u_ * u_.transpose() + v_ * v_.transpose();
}

bool GreatCircle::same_circle(const GreatCircle& o, double tol) const {
  return (projector() - o.projector()).cwiseAbs().maxCoeff() < tol;
}

IsometryKind classify_kind(const Mat4& m, double tol) {
  const Mat4& j = complex_structure();
  if (((m * j) - (j * m)).cwiseAbs().maxCoeff() < tol) return IsometryKind::unitary;
  if (((m * j) + (j * m)).cwiseAbs().maxCoeff() < tol) return IsometryKind::antiunitary;
  return IsometryKind::neither;
}

Isometry Isometry::from_matrix(const Mat4& m) {
  if ((m.transpose() * m - Mat4::Identity()).cwiseAbs().maxCoeff() > kMatTol)
    throw NonOrthogonalGenerator("matrix is not orthogonal");
  return Isometry(m, classify_kind(m));
}

Isometry Isometry::from_u2(Complex a, Complex b, Complex c, Complex d) {
  return from_matrix(complex_linear(a, b, c, d));
}

Isometry Isometry::identity() { return Isometry(Mat4::Identity(), IsometryKind::unitary); }

GreatCircle Isometry::apply(const GreatCircle& c) const {
  return GreatCircle(m_ * c.u(), m_ * c.v(), m_ * c.perp_u(), m_ * c.perp_v());
}

Isometry Isometry::operator*(const Isometry& o) const {
  Mat4 p = m_ * o.m_;
  return Isometry(p, classify_kind(p));
}

Isometry Isometry::inverse() const {
  Mat4 t = m_.transpose();
  return Isometry(t, kind_);
}

Vec3 hopf_project(const Vec4& x) {
  auto [w1, w2] = to_c2(x);
  Complex p = w1 * std::conj(w2);
  return Vec3(p.real(), p.imag(), 0.5 * (std::norm(w1) - std::norm(w2)));
}

S2Point hopf_project(const S3Point& p) { return S2Point(hopf_project(p.vec())); }

Isometry rot(const GreatCircle& c, double t) {
  const Vec4 &pu = c.perp_u(), &pv = c.perp_v();
  Mat4 m = c.projector() + std::cos(t) * (pu * pu.transpose() + pv * pv.transpose()) +
           std::sin(t) * (pv * pu.transpose() - pu * pv.transpose());
  return Isometry::from_matrix(m);
}

Isometry refl(const GreatCircle& c) {
  Mat4 m = 2.0 * c.projector() - Mat4::Identity();
  return Isometry::from_matrix(m);
}

double dist_to_circle(const GreatCircle& c, const Vec4& p) {
  // atan2 of the out-of-plane vs in-plane components; well conditioned at
  // both ends of [0, pi/2], unlike acos of the projection norm.
  double a = c.u().dot(p), b = c.v().dot(p);
  double in_plane = std::sqrt(a * a + b * b);
  Vec4 residual = p - a * c.u() - b * c.v();
  return std::atan2(residual.norm(), in_plane);
}

Mat3 project_o3(const Isometry& t) {
  if (t.kind() == IsometryKind::neither)
    throw NonFiberPreservingElement("isometry does not preserve the Hopf fibers");
  const Vec4 e1 = from_c2(1, 0);
  const Vec4 qx = from_c2(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  const Vec4 qy = from_c2(1.0 / std::sqrt(2.0), Complex(0, 1.0 / std::sqrt(2.0)));
  Mat3 r;
  r.col(0) = 2.0 * hopf_project(t.apply(qx));
  r.col(1) = -2.0 * hopf_project(t.apply(qy));
  r.col(2) = 2.0 * hopf_project(t.apply(e1));
  return r;
}

GreatCircle circle_c1() {
  return GreatCircle(Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0), Vec4(0, 0, 1, 0), Vec4(0, 0, 0, 1));
}

GreatCircle circle_c1_perp() {
  return GreatCircle(Vec4(0, 0, 1, 0), Vec4(0, 0, 0, 1), Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0));
}

GreatCircle circle_c00() {
  return GreatCircle(Vec4(1, 0, 0, 0), Vec4(0, 0, 1, 0));
}

GreatCircle circle_c00_perp() {
  return GreatCircle(Vec4(0, 1, 0, 0), Vec4(0, 0, 0, 1));
}

Isometry random_unitary(Rng& rng) {
  // e^{i phi} times an SU(2) element drawn from a uniform quaternion.
  Vec4 q = rng.next_s3();
  Complex a(q[0], q[1]), b(q[2], q[3]);
  Complex phase = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
  return Isometry::from_u2(phase * a, phase * b, -phase * std::conj(b), phase * std::conj(a));
}

Isometry random_antiunitary(Rng& rng) {
  Isometry u = random_unitary(rng);
  return Isometry::from_matrix(u.mat() * conjugation());
}

Vec4 toroidal_point(double r, double theta, double z) {
  Complex ez = std::polar(1.0, z);
  return from_c2(ez * std::cos(r), ez * std::polar(std::sin(r), theta));
}

ToroidalCoords toroidal_coords(const Vec4& x) {
  auto [w1, w2] = to_c2(x);
  ToroidalCoords c;
  c.r = std::atan2(std::abs(w2), std::abs(w1));
  c.z = std::abs(w1) > 1e-15 ? std::arg(w1) : 0.0;
  c.theta = std::abs(w2) > 1e-15 ? wrap_angle(std::arg(w2) - c.z) : 0.0;
  return c;
}

}  // namespace s3min
