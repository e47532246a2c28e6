#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "moufang/perm.hpp"
#include "moufang/report.hpp"

namespace moufang {

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Base points are the lowest-index moved points, except for an optional
/// caller-supplied prefix (used to put a stabilizer of interest at the top
/// of the chain).  No randomization anywhere, so transversals and orders
/// are reproducible across runs.
class Bsgs {
public:
  Bsgs(int degree, const std::vector<Permutation>& generators,
       const std::vector<int>& base_hint = {});

  int degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  std::vector<int> base() const;
  size_t num_levels() const { return levels_.size(); }
  std::uint64_t orbit_size(size_t level) const { return levels_[level].orbit.size(); }
  /// Strong generators fixing base[0..k-1]; k = 0 gives all of them.
  std::vector<Permutation> stabilizer_generators(size_t k) const;

private:
  struct Level {
    int base_point;
    std::vector<Permutation> gens;
    std::vector<int> orbit;                 // BFS order, orbit[0] = base_point
    std::vector<int> orbit_pos;             // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;   // transversal[i] maps base_point to orbit[i]
  };

  void add_level(int base_point);
  void recompute_orbit(Level& lv);
  std::pair<Permutation, size_t> strip(Permutation g, size_t from) const;

  int degree_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators.  The stabilizer chain and the
/// element list are built lazily and cached; construction itself is cheap.
/// Build the caches before sharing an instance across threads.
class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<Permutation> generators,
                   std::vector<int> base_hint = {});
  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }
  /// Deduplicated, identity-free generator list.
  const std::vector<Permutation>& generators() const { return gens_; }

  const Bsgs& bsgs() const;
  std::uint64_t order() const;
  bool member(const Permutation& p) const;
  /// Sorted element list; throws TooLarge when order() exceeds the limit.
  const std::vector<Permutation>& elements(std::uint64_t limit = kDefaultEnumLimit) const;

private:
  int degree_;
  std::vector<Permutation> gens_;
  std::vector<int> base_hint_;
  mutable std::shared_ptr<const Bsgs> bsgs_;
  mutable std::shared_ptr<const std::vector<Permutation>> elements_;
};

/// [xy,zt] = [x,t]^y [y,t] [x,z]^(yt) [y,z]^t over quadruples; exhaustive
/// while order^4 fits the budget, else sampled.
CheckReport check_identity1(const PermutationGroup& G, const ScanPolicy& policy = {});

/// Elements of G commuting with every permutation in S, by element filter.
PermutationGroup centralizer_in(const PermutationGroup& G, const std::vector<Permutation>& S,
                                std::uint64_t enum_limit = kDefaultEnumLimit);
PermutationGroup center(const PermutationGroup& G,
                        std::uint64_t enum_limit = kDefaultEnumLimit);

struct GroupSeries {
  std::vector<std::vector<Permutation>> chain;  // ascending element sets, chain[0] = {1}
  bool terminated = false;
  std::optional<int> nilpotency_class;
};

GroupSeries upper_central_series_group(const PermutationGroup& G,
                                       std::uint64_t enum_limit = kDefaultEnumLimit);
std::optional<int> nilpotency_class_group(const PermutationGroup& G,
                                          std::uint64_t enum_limit = kDefaultEnumLimit);

bool is_p_group(const PermutationGroup& G, int p);
/// Every g in G has g^(p^k) in Z for some k, without building the quotient.
CheckReport quotient_is_p_group_check(const PermutationGroup& G, const PermutationGroup& Z,
                                      int p, std::uint64_t enum_limit = kDefaultEnumLimit);

}  // namespace moufang
