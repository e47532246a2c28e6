#pragma once

#include <cstdint>
#include <vector>

namespace moufang {

/// A bijection on [0, degree).  Composition applies the left factor first:
/// compose(p, q) maps i to q(p(i)), so products read left to right as
/// actions.  Fixed once; all commutators and conjugates use this order.
class Permutation {
public:
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// lcm of cycle lengths.
  std::uint64_t order() const;
  int lowest_moved_point() const;  // -1 for the identity

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
/// b^-1 * a * b.
Permutation conjugate(const Permutation& a, const Permutation& b);
/// a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);
bool commute(const Permutation& a, const Permutation& b);

struct PermHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace moufang
