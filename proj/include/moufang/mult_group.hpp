#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/perm.hpp"
#include "moufang/perm_group.hpp"
#include "moufang/report.hpp"

namespace moufang {

/// Left translation z -> x*z as a permutation of the element indices.
/// Commutative loops have no separate right translations.
Permutation left_translation(const FiniteLoop& L, int x);

/// Group generated by all translations, with the chain based so the
/// stabilizer of the identity element sits at level one.
PermutationGroup multiplication_group(const FiniteLoop& L);

/// Strong generators of the stabilizer of the identity inside the
/// multiplication group; generates the inner mapping group.
std::vector<Permutation> inner_generators(const FiniteLoop& L);
PermutationGroup inner_mapping_group(const FiniteLoop& L);

/// The inner mapping z -> (xy) \ (x(yz)).
Permutation inner_mapping(const FiniteLoop& L, int x, int y);

/// Every directly-built inner mapping must sift into the extracted
/// stabilizer; this cross-checks the chain against the definition.
CheckReport inner_mapping_closure_check(const FiniteLoop& L);

/// In a CML all inner mappings respect the multiplication.
CheckReport inner_mappings_are_automorphisms_check(const FiniteLoop& L);

/// Normality = closure under the inner mapping generators.
bool is_normal(const FiniteLoop& L, const Subloop& H, const std::vector<Permutation>& inner_gens);

struct MultGroupInvariants {
  std::uint64_t order = 0;
  std::uint64_t inner_order = 0;
  bool transitive = false;
  std::optional<std::uint64_t> center_order;
  std::optional<int> nilpotency_class;
  bool three_group = false;
  std::optional<bool> center_quotient_three_group;
  std::vector<std::string> notes;  // which fields were skipped and why
};

MultGroupInvariants mult_group_invariants(const FiniteLoop& L,
                                          std::uint64_t enum_limit = kDefaultEnumLimit);

}  // namespace moufang
