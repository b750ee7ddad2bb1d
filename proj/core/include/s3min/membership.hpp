#pragma once

#include "s3min/configuration.hpp"
#include "s3min/group.hpp"

namespace s3min {

/// Verification of the distinguished element identities and membership
/// claims of the symmetry group.
struct MembershipReport {
  bool turn_and_shift_in_group = false;      // rot_C1^{pi/2} rot_C1^{pi/N} rot_C1perp^{pi/N}
  bool isoclinic_scaf_in_group = false;      // rot_L^{pi/4} rot_{Lperp}^{pi/4} for every L in scaf
  bool axis_reflections_in_group = false;    // refl(L_Omega) for every prism
  bool quadruple_identities_hold = false;    // the three diagonal composites
  bool triple_identities_hold = false;       // the two pairs of triple products
  double max_identity_error = 0.0;
  bool all() const {
    return turn_and_shift_in_group && isoclinic_scaf_in_group && axis_reflections_in_group &&
           quadruple_identities_hold && triple_identities_hold;
  }
};

MembershipReport membership_checks(const Configuration& cfg, const FiniteGroup& g,
                                   double tol = 1e-10);

/// True iff r maps the cube [-1,1]^3 to itself, i.e. is a signed permutation.
bool preserves_cube(const Mat3& r, double tol = 1e-9);

}  // namespace s3min
