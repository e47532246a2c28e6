#include "moufang/structure.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "moufang/errors.hpp"
#include "moufang/mult_group.hpp"

namespace moufang {

namespace {

// Grows a closed member set by one element, completing products and left
// quotients until closed again.  in_set and members must describe a subloop.
void extend_closure(const FiniteLoop& L, std::vector<char>& in_set, std::vector<int>& members,
                    int x) {
  if (in_set[x]) return;
  std::vector<int> stack{x};
  in_set[x] = 1;
  members.push_back(x);
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int m = members[i];
      for (int v : {L.mul(t, m), L.mul(m, t), L.left_div(t, m), L.left_div(m, t)}) {
        if (!in_set[v]) {
          in_set[v] = 1;
          members.push_back(v);
          stack.push_back(v);
        }
      }
    }
  }
}

std::vector<int> sorted_closure(const FiniteLoop& L, const std::vector<int>& gens) {
  std::vector<char> in_set(L.order(), 0);
  std::vector<int> members{L.identity()};
  in_set[L.identity()] = 1;
  for (int g : gens) extend_closure(L, in_set, members, g);
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subloop loop_center(const FiniteLoop& L) {
  if (!L.cml()) throw NotCML("center is only computed for CML input");
  int n = L.order();
  int e = L.identity();
  std::vector<int> members;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y) {
      for (int z = 0; z < n; ++z) {
        if (L.associator(x, y, z) != e) {
          central = false;
          break;
        }
      }
    }
    if (central) members.push_back(x);
  }
  return make_subloop(L, members);
}

Subloop centralizer(const FiniteLoop& L, const Subloop& H, const std::vector<int>& M) {
  if (!L.cml()) throw NotCML("centralizers are only computed for CML input");
  if (H.parent != &L) throw InputError("subloop belongs to a different loop");
  for (int m : M) {
    if (m < 0 || m >= L.order()) throw InputError("centralizing set element out of range");
  }
  std::vector<int> members;
  for (int x : H.members) {
    bool ok = true;
    for (size_t i = 0; i < M.size() && ok; ++i) {
      for (size_t j = 0; j < M.size(); ++j) {
        int y = M[i], z = M[j];
        if (L.mul(x, L.mul(y, z)) != L.mul(L.mul(x, y), z)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) members.push_back(x);
  }
  // The cited subloop property must hold; check it rather than trust it.
  std::vector<char> in_set(L.order(), 0);
  for (int m : members) in_set[m] = 1;
  for (int a : members) {
    for (int b : members) {
      if (!in_set[L.mul(a, b)]) {
        throw ClosureViolation("centralizer not closed under product at (" + std::to_string(a) +
                               "," + std::to_string(b) + ")");
      }
      if (!in_set[L.left_div(a, b)]) {
        throw ClosureViolation("centralizer not closed under division at (" + std::to_string(a) +
                               "," + std::to_string(b) + ")");
      }
    }
  }
  return Subloop{&L, std::move(members)};
}

LoopCentralSeries upper_central_series_loop(const FiniteLoop& L) {
  if (!L.cml()) throw NotCML("central series is only computed for CML input");
  int n = L.order();
  LoopCentralSeries out;
  out.chain.push_back(make_subloop(L, {L.identity()}));
  // The cap guards termination even if an invariant were broken upstream.
  for (int iter = 0; iter <= n; ++iter) {
    if (out.chain.back().order() == n) {
      out.nilpotency_class = static_cast<int>(out.chain.size()) - 1;
      return out;
    }
    QuotientResult Q = quotient(L, out.chain.back());
    Subloop zq = loop_center(Q.loop);
    std::vector<char> in_zq(Q.loop.order(), 0);
    for (int m : zq.members) in_zq[m] = 1;
    std::vector<int> next;
    for (int x = 0; x < n; ++x) {
      if (in_zq[Q.projection.map[x]]) next.push_back(x);
    }
    if (next.size() == out.chain.back().members.size()) return out;  // stalled
    out.chain.push_back(make_subloop(L, next));
  }
  return out;
}

std::optional<int> nilpotency_class_loop(const FiniteLoop& L) {
  return upper_central_series_loop(L).nilpotency_class;
}

// ---------------------------------------------------------------------------
// Generated-subloop class bound

namespace {

// Nilpotency class of the subloop with the given (sorted) member set,
// memoized across the many generating sets that reach the same subloop.
int memoized_class(const FiniteLoop& L, const std::vector<int>& members,
                   std::map<std::vector<int>, int>& memo) {
  auto it = memo.find(members);
  if (it != memo.end()) return it->second;
  SubloopTable sub = as_loop(Subloop{&L, members});
  std::optional<int> cls = nilpotency_class_loop(sub.loop);
  if (!cls) throw InvariantViolation("generated subloop of a CML is not centrally nilpotent");
  memo.emplace(members, *cls);
  return *cls;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

}  // namespace

CheckReport bruck_slaby_check(const FiniteLoop& L, int max_gens, const ScanPolicy& policy) {
  const std::string name = "generated-subloop-class-bound";
  if (max_gens < 1) throw InputError("max_gens must be at least 1");
  if (!L.cml()) return CheckReport::skipped(name, "input is not a CML");
  int n = L.order();
  std::map<std::vector<int>, int> memo;
  std::uint64_t count = 0;
  bool all_exhaustive = true;
  std::optional<CheckReport> failure;

  auto inspect = [&](const std::vector<int>& subset, const std::vector<int>& members,
                     CheckReport::Mode mode) {
    ++count;
    int bound = std::max(1, static_cast<int>(subset.size()) - 1);
    int cls = memoized_class(L, members, memo);
    if (cls > bound && !failure) {
      failure = CheckReport::fail(name, mode, count, subset)
                    .with_detail("generated subloop has class " + std::to_string(cls) +
                                 ", above the bound " + std::to_string(bound));
    }
  };

  for (int size = 1; size <= max_gens && !failure; ++size) {
    bool exhaustive = binomial_capped(n, size, kDefaultEnumLimit) <= kDefaultEnumLimit;
    if (exhaustive) {
      // Depth-first over ascending index tuples, extending the closure one
      // generator at a time so shared prefixes share the work.
      std::vector<int> subset;
      auto rec = [&](auto&& self, int start, const std::vector<char>& in_set,
                     const std::vector<int>& members) -> void {
        if (failure) return;
        if (static_cast<int>(subset.size()) == size) {
          std::vector<int> sorted_members = members;
          std::sort(sorted_members.begin(), sorted_members.end());
          inspect(subset, sorted_members, CheckReport::Exhaustive);
          return;
        }
        int need = size - static_cast<int>(subset.size());
        for (int x = start; x <= n - need; ++x) {
          subset.push_back(x);
          if (in_set[x]) {
            // Closure unchanged; a smaller subset already covered this class.
            ++count;
          } else {
            std::vector<char> next_in = in_set;
            std::vector<int> next_members = members;
            extend_closure(L, next_in, next_members, x);
            self(self, x + 1, next_in, next_members);
          }
          subset.pop_back();
          if (failure) return;
        }
      };
      std::vector<char> in0(n, 0);
      std::vector<int> m0{L.identity()};
      in0[L.identity()] = 1;
      rec(rec, 0, in0, m0);
    } else {
      all_exhaustive = false;
      std::mt19937_64 rng(policy.seed);
      for (std::uint64_t s = 0; s < policy.subset_samples && !failure; ++s) {
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < size) picked.insert(static_cast<int>(rng() % n));
        std::vector<int> subset(picked.begin(), picked.end());
        inspect(subset, sorted_closure(L, subset), CheckReport::Sampled);
      }
    }
  }
  if (failure) {
    return all_exhaustive ? *failure : failure->with_seed(policy.seed);
  }
  CheckReport ok = CheckReport::pass(
      name, all_exhaustive ? CheckReport::Exhaustive : CheckReport::Sampled, count);
  return all_exhaustive ? ok : ok.with_seed(policy.seed);
}

// ---------------------------------------------------------------------------
// Subloop lattice

std::vector<Subloop> all_subloops(const FiniteLoop& L) {
  int n = L.order();
  if (n > 243) throw BudgetExceeded("subloop enumeration is limited to order 243");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> trivial{L.identity()};
  seen.insert(trivial);
  queue.push_back(trivial);
  for (size_t q = 0; q < queue.size(); ++q) {
    std::vector<int> base = queue[q];
    std::vector<char> base_in(n, 0);
    for (int m : base) base_in[m] = 1;
    for (int x = 0; x < n; ++x) {
      if (base_in[x]) continue;
      std::vector<char> in_set = base_in;
      std::vector<int> members = base;
      extend_closure(L, in_set, members, x);
      std::sort(members.begin(), members.end());
      if (seen.insert(members).second) queue.push_back(std::move(members));
    }
  }
  std::vector<std::vector<int>> ordered(seen.begin(), seen.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subloop> out;
  out.reserve(ordered.size());
  for (auto& members : ordered) out.push_back(Subloop{&L, std::move(members)});
  return out;
}

std::vector<Subloop> maximal_subloops(const FiniteLoop& L) {
  int n = L.order();
  std::vector<Subloop> subs = all_subloops(L);
  std::vector<std::vector<char>> bitmaps;
  bitmaps.reserve(subs.size());
  for (const auto& s : subs) {
    std::vector<char> b(n, 0);
    for (int m : s.members) b[m] = 1;
    bitmaps.push_back(std::move(b));
  }
  std::vector<Subloop> maximal;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() == n) continue;
    bool covered_only_by_l = true;
    for (size_t j = 0; j < subs.size() && covered_only_by_l; ++j) {
      if (j == i || subs[j].order() == n || subs[j].order() <= subs[i].order()) continue;
      bool contains = true;
      for (int m : subs[i].members) contains = contains && bitmaps[j][m];
      covered_only_by_l = !contains;
    }
    if (covered_only_by_l) maximal.push_back(subs[i]);
  }
  if (L.cml()) {
    std::vector<Permutation> gens = inner_generators(L);
    for (const auto& m : maximal) {
      if (!is_normal(L, m, gens)) {
        throw NormalityViolation("maximal subloop of order " + std::to_string(m.order()) +
                                 " is not normal");
      }
    }
  }
  return maximal;
}

// ---------------------------------------------------------------------------
// Minimal generators and rank

namespace {

struct GeneratorSearch {
  const FiniteLoop* loop;
  const std::vector<int>* candidates;  // sorted members of the target subloop
  size_t target_size = 0;
  std::uint64_t budget = 0;
  std::uint64_t closures = 0;

  bool search(const std::vector<char>& in_set, const std::vector<int>& members, size_t start,
              int remaining) {
    if (remaining == 0) return members.size() == target_size;
    for (size_t i = start; i + remaining <= candidates->size(); ++i) {
      int x = (*candidates)[i];
      // A candidate inside the prefix closure adds nothing; a smaller
      // generating set would have been found at an earlier size.
      if (in_set[x]) continue;
      if (++closures > budget) throw BudgetExceeded("generator search budget exceeded");
      std::vector<char> next_in = in_set;
      std::vector<int> next_members = members;
      extend_closure(*loop, next_in, next_members, x);
      if (next_members.size() == target_size && remaining == 1) return true;
      if (next_members.size() < target_size &&
          search(next_in, next_members, i + 1, remaining - 1)) {
        return true;
      }
    }
    return false;
  }
};

}  // namespace

int min_generators(const FiniteLoop& L, const Subloop& H, std::uint64_t closure_budget) {
  if (H.parent != &L) throw InputError("subloop belongs to a different loop");
  if (H.order() == 1) return 0;
  GeneratorSearch gs;
  gs.loop = &L;
  gs.candidates = &H.members;
  gs.target_size = H.members.size();
  gs.budget = closure_budget;
  // A proper subloop has at most half the elements, so every generating
  // chain gains a factor of two per step.
  int max_k = 1;
  while ((std::uint64_t{1} << max_k) < H.members.size()) ++max_k;
  std::vector<char> in0(L.order(), 0);
  std::vector<int> m0{L.identity()};
  in0[L.identity()] = 1;
  for (int k = 1; k <= max_k; ++k) {
    if (gs.search(in0, m0, 0, k)) return k;
  }
  throw InvariantViolation("generator search exhausted all sizes");
}

RankReport special_rank(const FiniteLoop& L) {
  std::vector<Subloop> subs = all_subloops(L);
  RankReport out;
  out.subloop_count = subs.size();
  out.special_rank = 1;
  out.witness_subloop = subs.front();
  for (const auto& s : subs) {
    int g = min_generators(L, s);
    if (g > out.special_rank) {
      out.special_rank = g;
      out.witness_subloop = s;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma-level checks

CheckReport order3_normal_central_check(const FiniteLoop& L) {
  const std::string name = "order3-normal-central";
  if (!L.cml()) return CheckReport::skipped(name, "input is not a CML");
  int n = L.order();
  std::vector<char> central(n, 0);
  for (int z : loop_center(L).members) central[z] = 1;
  std::vector<Permutation> gens = inner_generators(L);
  std::uint64_t count = 0;
  for (int a = 0; a < n; ++a) {
    if (L.element_order(a) != 3) continue;
    ++count;
    Subloop S = generate(L, {a});
    if (is_normal(L, S, gens) && !central[a]) {
      return CheckReport::fail(name, CheckReport::Exhaustive, count, {a})
          .with_detail("order-3 element generates a normal subloop but is not central");
    }
  }
  return CheckReport::pass(name, CheckReport::Exhaustive, count);
}

CheckReport associator_hom_check(const FiniteLoop& L, int a, int b) {
  const std::string name = "associator-homomorphism";
  if (!L.cml()) return CheckReport::skipped(name, "input is not a CML");
  int n = L.order();
  if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("element out of range");
  std::vector<char> central(n, 0);
  for (int z : loop_center(L).members) central[z] = 1;
  std::vector<int> phi(n);
  for (int x = 0; x < n; ++x) {
    phi[x] = L.associator(x, a, b);
    if (!central[phi[x]]) {
      return CheckReport::skipped(name, "hypothesis fails: associator (" + std::to_string(x) +
                                            "," + std::to_string(a) + "," + std::to_string(b) +
                                            ") is not central");
    }
  }
  std::uint64_t count = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ++count;
      if (phi[L.mul(x, y)] != L.mul(phi[x], phi[y])) {
        return CheckReport::fail(name, CheckReport::Exhaustive, count, {x, y})
            .with_detail("map x -> (x,a,b) is not multiplicative at this pair");
      }
    }
  }
  Subloop Z_ab = centralizer(L, make_subloop_all(L), {a, b});
  std::vector<int> kernel;
  for (int x = 0; x < n; ++x) {
    if (phi[x] == L.identity()) kernel.push_back(x);
  }
  if (kernel != Z_ab.members) {
    std::vector<int> diff;
    std::set_symmetric_difference(kernel.begin(), kernel.end(), Z_ab.members.begin(),
                                  Z_ab.members.end(), std::back_inserter(diff));
    return CheckReport::fail(name, CheckReport::Exhaustive, count, {diff.front()})
        .with_detail("kernel of x -> (x,a,b) differs from the centralizer of {a,b}");
  }
  return CheckReport::pass(name, CheckReport::Exhaustive, count);
}

CheckReport remak_check(const FiniteLoop& L, const std::vector<int>& gens) {
  const std::string name = "centralizer-product-embedding";
  if (!L.cml()) return CheckReport::skipped(name, "input is not a CML");
  int n = L.order();
  for (int g : gens) {
    if (g < 0 || g >= n) throw InputError("element out of range");
  }
  std::optional<int> cls = nilpotency_class_loop(L);
  if (!cls || *cls > 2) {
    return CheckReport::skipped(name, "hypothesis fails: nilpotency class exceeds 2");
  }
  Subloop whole = make_subloop_all(L);
  Subloop Z_all = centralizer(L, whole, gens);

  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) pairs.emplace_back(gens[i], gens[j]);
  }
  // Intersection of the pair centralizers; no pairs means the whole loop.
  std::vector<char> in_meet(n, 1);
  std::vector<Subloop> pair_centralizers;
  for (auto [x, y] : pairs) {
    Subloop Zi = centralizer(L, whole, {x, y});
    std::vector<char> in_zi(n, 0);
    for (int m : Zi.members) in_zi[m] = 1;
    for (int v = 0; v < n; ++v) in_meet[v] = in_meet[v] && in_zi[v];
    pair_centralizers.push_back(std::move(Zi));
  }
  std::vector<int> meet;
  for (int v = 0; v < n; ++v) {
    if (in_meet[v]) meet.push_back(v);
  }
  std::uint64_t count = n;
  if (meet != Z_all.members) {
    std::vector<int> diff;
    std::set_symmetric_difference(meet.begin(), meet.end(), Z_all.members.begin(),
                                  Z_all.members.end(), std::back_inserter(diff));
    return CheckReport::fail(name, CheckReport::Exhaustive, count, {diff.front()})
        .with_detail("intersection of pair centralizers differs from the joint centralizer");
  }
  // The combined quotient projections must have exactly that kernel, which
  // makes L / Z(A) embed into the product of the L / Z(A_i).
  std::vector<LoopMorphism> projections;
  for (const auto& Zi : pair_centralizers) projections.push_back(quotient(L, Zi).projection);
  std::vector<int> combined_kernel;
  for (int x = 0; x < n; ++x) {
    bool in_all = true;
    for (const auto& p : projections) {
      in_all = in_all && p.map[x] == p.map[L.identity()];
    }
    if (in_all) combined_kernel.push_back(x);
  }
  if (combined_kernel != Z_all.members) {
    std::vector<int> diff;
    std::set_symmetric_difference(combined_kernel.begin(), combined_kernel.end(),
                                  Z_all.members.begin(), Z_all.members.end(),
                                  std::back_inserter(diff));
    return CheckReport::fail(name, CheckReport::Exhaustive, count, {diff.front()})
        .with_detail("combined projection kernel differs from the joint centralizer");
  }
  return CheckReport::pass(name, CheckReport::Exhaustive, count);
}

OmegaReport omega_report(const FiniteLoop& L) {
  OmegaReport r;
  r.order = L.order();
  RankReport rank = special_rank(L);
  r.special_rank = rank.special_rank;
  r.subloop_count = rank.subloop_count;
  Subloop whole = make_subloop_all(L);
  r.d = min_generators(L, whole);
  // Finiteness settles the chain conditions; the lattice size above is the
  // concrete evidence.  Centralizer finiteness is witnessed directly when
  // the loop is a CML (the only case the centralizer is defined for).
  r.finite = true;
  r.finitely_generated = true;
  r.max_condition = true;
  r.min_condition = true;
  if (L.cml()) {
    Subloop zc = centralizer(L, whole, whole.members);
    r.centralizers_finite = static_cast<std::uint64_t>(zc.order()) <= r.order;
  }
  return r;
}

}  // namespace moufang
