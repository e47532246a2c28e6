#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "moufang/report.hpp"

namespace moufang {

// Dense tables stay reasonable up to this order; everything the verification
// suite needs fits far below it.
inline constexpr int kMaxLoopOrder = 2048;

/// A finite loop as an order-n Cayley table.  Rows and columns are
/// permutations of [0, n) and a two-sided identity exists; both are enforced
/// at construction, so an instance is always a valid loop.  Immutable.
class FiniteLoop {
public:
  /// Validates the table: throws NotLatinSquare / NoIdentity / FormatError /
  /// SizeOverflow on bad input.  The identity is auto-detected.
  explicit FiniteLoop(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int identity() const { return e_; }

  int mul(int a, int b) const { return table_[a * n_ + b]; }
  /// Unique x with a*x = b.
  int left_div(int a, int b) const { return ldiv_[a * n_ + b]; }
  /// a * inverse(a) = identity.
  int inverse(int a) const { return inv_[a]; }

  /// Least k >= 1 with a^k = e, powers left-normed: a^(k+1) = a * a^k.
  int element_order(int a) const;
  /// lcm of all element orders.
  std::uint64_t exponent() const;

  /// (a,b,c) defined by ab*c = (a*bc)(a,b,c).
  int associator(int a, int b, int c) const {
    return left_div(mul(a, mul(b, c)), mul(mul(a, b), c));
  }

  /// Cached exhaustive commutative-Moufang test (boolean form of is_cml).
  bool cml() const;

  bool operator==(const FiniteLoop& o) const { return table_ == o.table_; }

  // The atomic cml cache needs hand-written copies/moves.
  FiniteLoop(const FiniteLoop& o);
  FiniteLoop& operator=(const FiniteLoop& o);
  FiniteLoop(FiniteLoop&& o) noexcept;
  FiniteLoop& operator=(FiniteLoop&& o) noexcept;

private:
  int n_ = 0;
  int e_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> ldiv_;   // ldiv_[a*n+b] = a \ b
  std::vector<int> inv_;
  mutable std::atomic<int> cml_state_{-1};  // -1 unknown, 0 no, 1 yes
};

CheckReport is_commutative(const FiniteLoop& L);
CheckReport is_associative(const FiniteLoop& L);
/// The identity x^2*yz = xy*xz alone, over all triples.
CheckReport check_moufang_identity(const FiniteLoop& L);
/// Commutativity plus the Moufang identity x^2*yz = xy*xz over all triples.
CheckReport is_cml(const FiniteLoop& L);

/// (xy,u,v) = (x,u,v)*((x,u,v),x,y)*(y,u,v)*((y,u,v),y,x) over quadruples,
/// products left-normed.  Exhaustive while n^4 fits the budget, else sampled.
CheckReport check_identity2(const FiniteLoop& L, const ScanPolicy& policy = {});
/// (x,y,z) = (y^-1,x,z) = (y,x,z)^-1 = (y,z,x) over all triples.
CheckReport check_identity3(const FiniteLoop& L);

/// A closed subset of a parent loop.  members is sorted and unique.
struct Subloop {
  const FiniteLoop* parent = nullptr;
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

/// Least subloop containing gens: worklist closure under mul and left_div.
Subloop generate(const FiniteLoop& L, const std::vector<int>& gens);
/// Wraps an explicit member set, checking identity membership and closure.
Subloop make_subloop(const FiniteLoop& L, std::vector<int> members);
/// The whole loop as a subloop of itself.
Subloop make_subloop_all(const FiniteLoop& L);

/// True iff every inner-mapping generator maps H onto itself.  For
/// commutative loops this is normality.
bool is_normal(const FiniteLoop& L, const Subloop& H);

struct LoopMorphism {
  std::vector<int> map;  // image of each source element
};
bool is_morphism(const FiniteLoop& src, const FiniteLoop& dst, const LoopMorphism& f);

struct QuotientResult {
  FiniteLoop loop;
  LoopMorphism projection;
};
/// Coset loop L/H with the projection morphism.  Throws NotNormal when the
/// cosets fail to partition or the induced product is ill-defined.
QuotientResult quotient(const FiniteLoop& L, const Subloop& H);

FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b,
                          int max_order = kMaxLoopOrder);

/// A subloop re-indexed as a standalone loop; to_parent maps its element i
/// back to the parent index.
struct SubloopTable {
  FiniteLoop loop;
  std::vector<int> to_parent;
};
SubloopTable as_loop(const Subloop& H);

}  // namespace moufang
