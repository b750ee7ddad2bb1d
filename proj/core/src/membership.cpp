#include "s3min/membership.hpp"

#include <cmath>

namespace s3min {

namespace {

double mat_error(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat4 diag_u2(Complex d1, Complex d2) { return complex_linear(d1, 0, 0, d2); }

}  // namespace

bool preserves_cube(const Mat3& r, double tol) {
  for (int i = 0; i < 3; ++i) {
    int nonzero = 0;
    for (int j = 0; j < 3; ++j) {
      double v = std::abs(r(i, j));
      if (v > tol && std::abs(v - 1.0) > tol) return false;
      if (v > tol) ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

MembershipReport membership_checks(const Configuration& cfg, const FiniteGroup& g, double tol) {
  MembershipReport rep;
  const int N = cfg.N;
  const GreatCircle c1 = circle_c1(), c1p = circle_c1_perp();

  Isometry turn_and_shift =
      rot(c1, kPi / 2) * (rot(c1, kPi / N) * rot(c1p, kPi / N));
  rep.turn_and_shift_in_group = g.contains(turn_and_shift);

  // An isoclinic quarter-turn along each scaffolding circle, for one of the
  // four relative orientations of L and its polar circle.
  rep.isoclinic_scaf_in_group = true;
  for (const auto& L : cfg.scaf) {
    GreatCircle Lp = L.perp();
    bool found = false;
    for (double s1 : {1.0, -1.0})
      for (double s2 : {1.0, -1.0})
        if (g.contains(rot(L, s1 * kPi / 4) * rot(Lp, s2 * kPi / 4))) found = true;
    if (!found) rep.isoclinic_scaf_in_group = false;
  }

  rep.axis_reflections_in_group = true;
  for (const auto& prism : cfg.prisms)
    if (!g.contains(refl(prism.axis))) rep.axis_reflections_in_group = false;

  auto R = [&](int i) { return refl(cfg.rcol[i]); };

  // The three four-fold composites along C1-perp-side circles.
  double err = 0.0;
  err = std::max(err, mat_error((R(kG12) * R(kG1p2) * R(kG1p3) * R(kG13)).mat(),
                                diag_u2(Complex(0, -1), Complex(0, 1))));
  err = std::max(err, mat_error((R(kG12p) * R(kG1p2p) * R(kG1p3) * R(kG13)).mat(),
                                diag_u2(Complex(0, 1), Complex(0, -1))));
  err = std::max(err, mat_error((R(kG13p) * R(kG1p3p) * R(kG1p3) * R(kG13)).mat(),
                                diag_u2(-1, -1)));
  rep.quadruple_identities_hold = err < tol;
  rep.max_identity_error = err;

  // The triple products through the T1 circles.
  const Complex a = std::polar(1.0, kPi / 4), am = std::polar(1.0, -kPi / 4);
  double err3 = 0.0;
  err3 = std::max(err3, mat_error((R(kG13) * R(kG23) * R(kG12)).mat(), diag_u2(a, -am)));
  err3 = std::max(err3, mat_error((R(kG13p) * R(kG2p3p) * R(kG12p)).mat(), diag_u2(a, -am)));
  err3 = std::max(err3, mat_error((R(kG13p) * R(kG23p) * R(kG12)).mat(), diag_u2(am, -a)));
  err3 = std::max(err3, mat_error((R(kG13) * R(kG2p3) * R(kG12p)).mat(), diag_u2(am, -a)));
  rep.triple_identities_hold = err3 < tol;
  rep.max_identity_error = std::max(rep.max_identity_error, err3);

  return rep;
}

}  // namespace s3min
