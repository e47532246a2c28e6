#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/report.hpp"

namespace moufang {

/// Elements associating with every pair: { x : (x,y,z) = e for all y,z }.
Subloop loop_center(const FiniteLoop& L);

/// Z_H(M) = { x in H : x(yz) = (xy)z for all y,z in M }.  M empty gives H.
/// The filtered set is asserted closed; a closure failure is a hard error
/// because it would falsify the subloop property on this instance.
Subloop centralizer(const FiniteLoop& L, const Subloop& H, const std::vector<int>& M);

struct LoopCentralSeries {
  std::vector<Subloop> chain;  // ascending, chain[0] = {e}
  std::optional<int> nilpotency_class;
};

/// Iterates quotient + center + preimage until the chain stalls or fills L.
LoopCentralSeries upper_central_series_loop(const FiniteLoop& L);
std::optional<int> nilpotency_class_loop(const FiniteLoop& L);

/// Every subloop generated by n <= max_gens elements has nilpotency class
/// at most max(1, n-1).  Exhaustive over the size-n subsets while their
/// count fits the enumeration limit, else seeded samples.
CheckReport bruck_slaby_check(const FiniteLoop& L, int max_gens, const ScanPolicy& policy = {});

/// Full subloop lattice by breadth-first closure growth; |L| <= 243.
std::vector<Subloop> all_subloops(const FiniteLoop& L);
/// Subloops covered only by L itself; for CML input each one is asserted
/// normal (a violation is a hard error, not a check failure).
std::vector<Subloop> maximal_subloops(const FiniteLoop& L);

/// Smallest k such that some k-subset of H generates H; 0 for the trivial
/// subloop.  Exhaustive increasing-size search with prefix-closure pruning.
int min_generators(const FiniteLoop& L, const Subloop& H,
                   std::uint64_t closure_budget = 10'000'000);

struct RankReport {
  int special_rank = 1;
  Subloop witness_subloop;
  std::uint64_t subloop_count = 0;
};

/// Max of min_generators over all subloops (at least 1 by convention).
RankReport special_rank(const FiniteLoop& L);

/// Every order-3 element generating a normal subloop must be central.
CheckReport order3_normal_central_check(const FiniteLoop& L);

/// x -> (x,a,b) is a homomorphism into the center with kernel Z_L({a,b}),
/// provided all these associators are central (else reported as skipped).
CheckReport associator_hom_check(const FiniteLoop& L, int a, int b);

/// With A = gens and A_i its 2-subsets: the centralizers Z_L(A_i) intersect
/// to Z_L(A), and the combined quotient projections have kernel Z_L(A).
/// Requires class <= 2 (else reported as skipped).
CheckReport remak_check(const FiniteLoop& L, const std::vector<int>& gens);

struct OmegaReport {
  std::uint64_t order = 0;
  int d = 0;            // minimal generator count of the whole loop
  int special_rank = 1;
  std::uint64_t subloop_count = 0;
  bool finite = true;
  bool finitely_generated = true;
  bool max_condition = true;  // ascending subloop chains stabilize
  bool min_condition = true;  // descending subloop chains stabilize
  bool centralizers_finite = true;
};

/// The finiteness-condition profile of a finite loop: all five conditions
/// instantiate and the generator counts make them concrete.
OmegaReport omega_report(const FiniteLoop& L);

}  // namespace moufang
