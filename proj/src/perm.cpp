#include "moufang/perm.hpp"

#include <numeric>

#include "moufang/errors.hpp"

namespace moufang {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = degree();
  std::vector<char> seen(d, 0);
  for (int v : images_) {
    if (v < 0 || v >= d || seen[v])
      throw InputError("image list is not a bijection on [0," + std::to_string(d) + ")");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p(static_cast<int>(inv.size()));
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(degree(), 0);
  std::uint64_t acc = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    acc = std::lcm(acc, len);
  }
  return acc;
}

int Permutation::lowest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) out[i] = q[p[i]];
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
  return compose(compose(b.inverse(), a), b);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

bool commute(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  for (int i = 0; i < a.degree(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

}  // namespace moufang
