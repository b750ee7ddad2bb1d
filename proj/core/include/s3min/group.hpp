#pragma once

#include "s3min/s3.hpp"

#include <functional>
#include <unordered_map>
#include <vector>

namespace s3min {

/// Finite subgroup of O(4), stored as a deduplicated element list.  Elements
/// are compared through entrywise quantization at 9 decimal digits; distinct
/// elements of the groups built here are separated by far more than that.
class FiniteGroup {
 public:
  /// Breadth-first closure of the generators, in listing order with
  /// left-multiplication.  Throws ClosureCapExceeded if more than cap
  /// distinct elements appear, and NonOrthogonalGenerator for bad input.
  static FiniteGroup generate(const std::vector<Isometry>& gens, std::size_t cap);

  static FiniteGroup trivial();

  /// Wrap an externally obtained element list (e.g. a stabilizer).  The list
  /// must contain the identity and be closed; closure is the caller's duty
  /// and can be validated with verify_closure().
  static FiniteGroup from_elements(std::vector<Isometry> elems,
                                   std::vector<Isometry> gens = {});

  std::size_t size() const { return elems_.size(); }
  const Isometry& at(std::size_t i) const { return elems_[i]; }
  const std::vector<Isometry>& elements() const { return elems_; }
  const std::vector<Isometry>& generators() const { return gens_; }

  bool contains(const Mat4& m) const { return index_.count(mat_key(m)) != 0; }
  bool contains(const Isometry& g) const { return contains(g.mat()); }
  /// Index of an element, or -1.
  int index_of(const Mat4& m) const;

  /// Exhaustively checks products and inverses stay in the group.
  bool verify_closure() const;

 private:
  FiniteGroup() = default;
  void insert(const Isometry& g);

  std::vector<Isometry> elems_;
  std::vector<Isometry> gens_;
  std::unordered_map<MatKey, int, MatKeyHash> index_;
};

/// Orbit of an object, deduplicated in deterministic first-appearance order.
/// `apply` maps (Isometry, T) -> T and `eq` compares objects at the caller's
/// tolerance.
template <class T, class Apply, class Eq>
std::vector<T> orbit(const FiniteGroup& g, const T& x, Apply&& apply, Eq&& eq) {
  std::vector<T> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    T y = apply(g.at(i), x);
    bool seen = false;
    for (const T& z : out)
      if (eq(y, z)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(y));
  }
  return out;
}

/// Subgroup of elements fixing x (setwise, as decided by eq).
template <class T, class Apply, class Eq>
FiniteGroup stabilizer(const FiniteGroup& g, const T& x, Apply&& apply, Eq&& eq) {
  std::vector<Isometry> elems;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (eq(apply(g.at(i), x), x)) elems.push_back(g.at(i));
  return FiniteGroup::from_elements(std::move(elems));
}

/// Orbit of a point with distance-based equality.
std::vector<S3Point> orbit_points(const FiniteGroup& g, const S3Point& p, double tol = 1e-8);
/// Orbit of a circle (as a point set).
std::vector<GreatCircle> orbit_circles(const FiniteGroup& g, const GreatCircle& c,
                                       double tol = 1e-9);
FiniteGroup circle_stabilizer(const FiniteGroup& g, const GreatCircle& c, double tol = 1e-9);

struct KernelImage {
  /// Image under the fiberwise projection to O(3), deduplicated 3x3 matrices
  /// in first-appearance order.
  std::vector<Mat3> image;
  /// Elements mapping to the identity of O(3).
  FiniteGroup kernel = FiniteGroup::trivial();
};

/// Kernel and image of project_o3 restricted to G.  Throws
/// NonFiberPreservingElement if any element has kind `neither`.
KernelImage hopf_kernel_image(const FiniteGroup& g);

/// The permutation each group element induces on a labeled family of objects.
/// Throws if some element fails to permute the family (bijectivity check).
struct GroupAction {
  std::vector<std::vector<int>> perms;  // perms[e][i] = image index of item i
};

template <class T, class Apply, class Eq>
GroupAction group_action(const FiniteGroup& g, const std::vector<T>& items, Apply&& apply,
                         Eq&& eq) {
  GroupAction act;
  act.perms.resize(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    std::vector<int> perm(items.size(), -1);
    std::vector<bool> hit(items.size(), false);
    for (std::size_t i = 0; i < items.size(); ++i) {
      T y = apply(g.at(e), items[i]);
      for (std::size_t j = 0; j < items.size(); ++j)
        if (eq(y, items[j])) {
          perm[i] = static_cast<int>(j);
          break;
        }
      if (perm[i] < 0 || hit[perm[i]])
        throw Error("group element does not permute the labeled family");
      hit[perm[i]] = true;
    }
    act.perms[e] = std::move(perm);
  }
  return act;
}

}  // namespace s3min
