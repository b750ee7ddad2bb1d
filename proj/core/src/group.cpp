#include "s3min/group.hpp"

#include <deque>

namespace s3min {

void FiniteGroup::insert(const Isometry& g) {
  index_.emplace(mat_key(g.mat()), static_cast<int>(elems_.size()));
  elems_.push_back(g);
}

FiniteGroup FiniteGroup::generate(const std::vector<Isometry>& gens, std::size_t cap) {
  if (cap < 1) throw Error("closure cap must be at least 1");
  for (const auto& g : gens)
    if ((g.mat().transpose() * g.mat() - Mat4::Identity()).cwiseAbs().maxCoeff() > kMatTol)
      throw NonOrthogonalGenerator("generator is not orthogonal");

  FiniteGroup grp;
  grp.gens_ = gens;
  grp.insert(Isometry::identity());
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Isometry next = g * grp.elems_[cur];
      MatKey key = mat_key(next.mat());
      if (grp.index_.count(key)) continue;
      if (grp.elems_.size() >= cap)
        throw ClosureCapExceeded("group closure exceeded cap " + std::to_string(cap));
      queue.push_back(static_cast<int>(grp.elems_.size()));
      grp.index_.emplace(key, static_cast<int>(grp.elems_.size()));
      grp.elems_.push_back(next);
    }
  }
  return grp;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup grp;
  grp.insert(Isometry::identity());
  return grp;
}

FiniteGroup FiniteGroup::from_elements(std::vector<Isometry> elems, std::vector<Isometry> gens) {
  FiniteGroup grp;
  grp.gens_ = std::move(gens);
  bool has_id = false;
  for (const auto& g : elems) {
    if (grp.index_.count(mat_key(g.mat()))) continue;
    if (!has_id && (g.mat() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-9) has_id = true;
    grp.insert(g);
  }
  if (!has_id) throw Error("element list does not contain the identity");
  return grp;
}

int FiniteGroup::index_of(const Mat4& m) const {
  auto it = index_.find(mat_key(m));
  return it == index_.end() ? -1 : it->second;
}

bool FiniteGroup::verify_closure() const {
  for (const auto& a : elems_) {
    if (!contains(Mat4(a.mat().transpose()))) return false;
    for (const auto& b : elems_)
      if (!contains(Mat4(a.mat() * b.mat()))) return false;
  }
  return true;
}

std::vector<S3Point> orbit_points(const FiniteGroup& g, const S3Point& p, double tol) {
  return orbit(
      g, p, [](const Isometry& t, const S3Point& q) { return t.apply(q); },
      [tol](const S3Point& a, const S3Point& b) { return (a.vec() - b.vec()).norm() < tol; });
}

std::vector<GreatCircle> orbit_circles(const FiniteGroup& g, const GreatCircle& c, double tol) {
  return orbit(
      g, c, [](const Isometry& t, const GreatCircle& x) { return t.apply(x); },
      [tol](const GreatCircle& a, const GreatCircle& b) { return a.same_circle(b, tol); });
}

FiniteGroup circle_stabilizer(const FiniteGroup& g, const GreatCircle& c, double tol) {
  return stabilizer(
      g, c, [](const Isometry& t, const GreatCircle& x) { return t.apply(x); },
      [tol](const GreatCircle& a, const GreatCircle& b) { return a.same_circle(b, tol); });
}

KernelImage hopf_kernel_image(const FiniteGroup& g) {
  KernelImage out;
  std::vector<Isometry> kernel_elems;
  std::unordered_map<MatKey, int, MatKeyHash> seen;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Mat3 r = project_o3(g.at(i));
    if ((r - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-9) kernel_elems.push_back(g.at(i));
    MatKey key{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) key[3 * a + b] = quantize(r(a, b));
    if (seen.emplace(key, static_cast<int>(out.image.size())).second) out.image.push_back(r);
  }
  out.kernel = FiniteGroup::from_elements(std::move(kernel_elems));
  return out;
}

}  // namespace s3min
