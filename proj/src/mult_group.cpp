#include "moufang/mult_group.hpp"

#include <algorithm>

#include "moufang/errors.hpp"

namespace moufang {

Permutation left_translation(const FiniteLoop& L, int x) {
  int n = L.order();
  std::vector<int> images(n);
  for (int z = 0; z < n; ++z) images[z] = L.mul(x, z);
  return Permutation(std::move(images));
}

PermutationGroup multiplication_group(const FiniteLoop& L) {
  int n = L.order();
  std::vector<Permutation> gens;
  gens.reserve(n);
  for (int x = 0; x < n; ++x) gens.push_back(left_translation(L, x));
  return PermutationGroup(n, std::move(gens), {L.identity()});
}

std::vector<Permutation> inner_generators(const FiniteLoop& L) {
  return multiplication_group(L).bsgs().stabilizer_generators(1);
}

PermutationGroup inner_mapping_group(const FiniteLoop& L) {
  return PermutationGroup(L.order(), inner_generators(L));
}

Permutation inner_mapping(const FiniteLoop& L, int x, int y) {
  int n = L.order();
  int xy = L.mul(x, y);
  std::vector<int> images(n);
  for (int z = 0; z < n; ++z) images[z] = L.left_div(xy, L.mul(x, L.mul(y, z)));
  return Permutation(std::move(images));
}

CheckReport inner_mapping_closure_check(const FiniteLoop& L) {
  const std::string name = "inner-mapping-closure";
  int n = L.order();
  PermutationGroup M = multiplication_group(L);
  const Bsgs& chain = M.bsgs();
  PermutationGroup I(n, chain.stabilizer_generators(1));
  std::uint64_t count = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ++count;
      Permutation m = inner_mapping(L, x, y);
      if (m[L.identity()] != L.identity() || !I.member(m)) {
        return CheckReport::fail(name, CheckReport::Exhaustive, count, {x, y})
            .with_detail("inner mapping for (x,y) escapes the identity stabilizer");
      }
    }
  }
  // The stabilizer order must also match the transitive factorization.
  if (M.order() != static_cast<std::uint64_t>(n) * I.order()) {
    return CheckReport::fail(name, CheckReport::Exhaustive, count, {})
        .with_detail("stabilizer order does not divide out to the loop order");
  }
  return CheckReport::pass(name, CheckReport::Exhaustive, count);
}

CheckReport inner_mappings_are_automorphisms_check(const FiniteLoop& L) {
  const std::string name = "inner-mappings-are-automorphisms";
  if (!L.cml()) return CheckReport::skipped(name, "input is not a CML");
  int n = L.order();
  std::vector<Permutation> gens = inner_generators(L);
  std::uint64_t count = 0;
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Permutation& g = gens[gi];
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        ++count;
        if (g[L.mul(x, y)] != L.mul(g[x], g[y])) {
          return CheckReport::fail(name, CheckReport::Exhaustive, count,
                                   {static_cast<int>(gi), x, y})
              .with_detail("witness = (stabilizer generator index, x, y)");
        }
      }
    }
  }
  return CheckReport::pass(name, CheckReport::Exhaustive, count);
}

bool is_normal(const FiniteLoop& L, const Subloop& H,
               const std::vector<Permutation>& inner_gens) {
  if (H.parent != &L) throw InputError("subloop belongs to a different loop");
  std::vector<char> in_h(L.order(), 0);
  for (int h : H.members) in_h[h] = 1;
  for (const auto& g : inner_gens) {
    for (int h : H.members) {
      if (!in_h[g[h]]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteLoop& L, const Subloop& H) {
  return is_normal(L, H, inner_generators(L));
}

MultGroupInvariants mult_group_invariants(const FiniteLoop& L, std::uint64_t enum_limit) {
  MultGroupInvariants out;
  PermutationGroup M = multiplication_group(L);
  out.order = M.order();
  PermutationGroup I(L.order(), M.bsgs().stabilizer_generators(1));
  out.inner_order = I.order();

  // Transitivity: the orbit of the identity under the generators covers L.
  std::vector<char> seen(L.order(), 0);
  std::vector<int> queue{L.identity()};
  seen[L.identity()] = 1;
  for (size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : M.generators()) {
      int t = g[queue[q]];
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
  }
  out.transitive = queue.size() == static_cast<size_t>(L.order());

  out.three_group = is_p_group(M, 3);
  if (M.order() > enum_limit) {
    out.notes.push_back("multiplication group too large to enumerate; center skipped");
    return out;
  }
  PermutationGroup Z = center(M, enum_limit);
  out.center_order = Z.order();
  out.nilpotency_class = nilpotency_class_group(M, enum_limit);
  out.center_quotient_three_group = quotient_is_p_group_check(M, Z, 3, enum_limit).passed();
  return out;
}

}  // namespace moufang
