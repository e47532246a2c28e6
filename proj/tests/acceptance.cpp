// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion states what it certifies; oracle comparisons use
// the naive reference implementations from oracles.hpp.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "moufang/constructions.hpp"
#include "moufang/io.hpp"
#include "moufang/mult_group.hpp"
#include "moufang/perm_group.hpp"
#include "moufang/structure.hpp"
#include "moufang/verify.hpp"
#include "oracles.hpp"

using namespace moufang;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Criterion {
  std::string label;
  std::vector<std::string> problems;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  double finish(double limit_ms = 0) {
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (limit_ms > 0 && elapsed > limit_ms) {
      std::ostringstream ss;
      ss << "took " << elapsed << " ms, limit " << limit_ms << " ms";
      problems.push_back(ss.str());
    }
    if (problems.empty()) {
      std::printf("PASS %s (%.0f ms)\n", label.c_str(), elapsed);
    } else {
      ++failures;
      std::printf("FAIL %s (%.0f ms)\n", label.c_str(), elapsed);
      for (const auto& p : problems) std::printf("     - %s\n", p.c_str());
    }
    std::fflush(stdout);
    return elapsed;
  }
};

Permutation cycle(int degree, const std::vector<int>& pts) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (size_t i = 0; i < pts.size(); ++i) images[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(images);
}

void criterion1() {
  Criterion c("criterion 1: order-81 fixture is a nonassociative CML, exponent 3");
  FiniteLoop L = build_cml81();
  c.expect(L.order() == 81, "order is not 81");
  CheckReport cml = is_cml(L);
  c.expect(cml.passed(), "CML scan failed");
  c.expect(cml.mode == CheckReport::Exhaustive, "CML scan was not exhaustive");
  CheckReport assoc = is_associative(L);
  c.expect(assoc.failed(), "associativity unexpectedly holds");
  if (assoc.counterexample && assoc.counterexample->size() == 3) {
    int x = (*assoc.counterexample)[0], y = (*assoc.counterexample)[1],
        z = (*assoc.counterexample)[2];
    c.expect(L.mul(L.mul(x, y), z) != L.mul(x, L.mul(y, z)),
             "associativity witness does not replay");
  } else {
    c.expect(false, "associativity failure lacks a triple witness");
  }
  c.expect(L.exponent() == 3, "exponent is not 3");
  c.finish(2000);
}

void criterion2() {
  Criterion c("criterion 2: generated-subloop class bound and overall class 2");
  FiniteLoop L = build_cml81();
  CheckReport r = bruck_slaby_check(L, 3);
  c.expect(r.passed(), "class-bound check failed");
  c.expect(r.mode == CheckReport::Exhaustive, "class-bound check was not exhaustive");
  c.expect(nilpotency_class_loop(L) == std::optional<int>(2), "loop class is not 2");
  c.finish(60000);
}

void criterion3() {
  Criterion c("criterion 3: derived identities exhaustively, large group sampled");
  FiniteLoop L = build_cml81();

  CheckReport r3 = check_identity3(L);
  c.expect(r3.passed() && r3.mode == CheckReport::Exhaustive,
           "associator symmetry not exhaustively verified");
  c.expect(r3.count == 81ull * 81 * 81, "triple scan count wrong");

  CheckReport r2 = check_identity2(L);
  c.expect(r2.passed() && r2.mode == CheckReport::Exhaustive,
           "associator expansion not exhaustively verified");
  c.expect(r2.count == 81ull * 81 * 81 * 81, "quadruple scan count wrong");

  PermutationGroup s4(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  CheckReport small = check_identity1(s4);
  c.expect(small.passed() && small.mode == CheckReport::Exhaustive,
           "commutator identity not exhaustive on an order-24 group");

  PermutationGroup M = multiplication_group(L);
  CheckReport big = check_identity1(M);
  c.expect(big.passed(), "commutator identity failed on the multiplication group");
  c.expect(big.mode == CheckReport::Sampled, "expected sampled mode at order 2187");
  c.expect(big.count == 1000000, "sample count is not 10^6");
  c.expect(big.seed == std::optional<std::uint64_t>(42), "seed is not the default 42");
  c.finish();
}

void criterion4() {
  Criterion c("criterion 4: center quotients have exponent 3");
  FiniteLoop L = build_cml81();
  QuotientResult q = quotient(L, loop_center(L));
  c.expect(q.loop.order() == 27, "quotient order is not 27");
  c.expect(q.loop.exponent() == 3, "quotient exponent is not 3");

  FiniteLoop big = build("product(cml81,cyclic(3))");
  QuotientResult qb = quotient(big, loop_center(big));
  c.expect(qb.loop.order() == 27, "tensor-with-cyclic quotient order is not 27");
  c.expect(qb.loop.exponent() == 3, "larger quotient exponent is not 3");
  c.finish();
}

void criterion5() {
  Criterion c("criterion 5: multiplication group is a transitive nilpotent 3-group");
  FiniteLoop L = build_cml81();
  MultGroupInvariants inv = mult_group_invariants(L);
  c.expect(inv.transitive, "not transitive");
  c.expect(inv.order == 81 * inv.inner_order, "order does not factor as n * inner");
  c.expect(inv.order == 2187, "order is not 3^7");
  c.expect(inv.three_group, "not a 3-group");
  c.expect(inv.nilpotency_class.has_value(), "not nilpotent");
  c.expect(inv.center_order.value_or(0) > 1, "center is trivial");
  c.expect(inv.center_quotient_three_group == std::optional<bool>(true),
           "center quotient is not a 3-group");
  c.finish();
}

void criterion6() {
  Criterion c("criterion 6: associator map and centralizer product embedding");
  FiniteLoop L = build_cml81();
  c.expect(associator_hom_check(L, 27, 9).passed(), "associator map check failed");
  c.expect(remak_check(L, {27, 9, 3}).passed(), "product embedding check failed");
  c.finish();
}

void criterion7() {
  Criterion c("criterion 7: nontrivial centers across the fixture family");
  for (const char* text : {"cyclic(2)", "cyclic(3)", "cyclic(9)", "ea3(2)", "ea3(3)",
                           "ea3(4)", "cml81", "product(cml81,cyclic(3))"}) {
    FiniteLoop L = build(text);
    if (L.order() > 1) {
      c.expect(loop_center(L).order() > 1, std::string("trivial center for ") + text);
    }
  }
  c.expect(loop_center(build_cml81()).order() == 3, "fixture center order is not 3");
  c.finish();
}

void criterion8() {
  Criterion c("criterion 8: maximal subloops and inner mappings");
  FiniteLoop L = build_cml81();
  std::vector<Subloop> maxes = maximal_subloops(L);
  c.expect(maxes.size() == 13, "expected 13 maximal subloops");
  std::vector<Permutation> inner = inner_generators(L);
  for (const auto& M : maxes) {
    c.expect(M.order() == 27, "maximal subloop order is not 27");
    c.expect(is_normal(L, M, inner), "maximal subloop is not normal");
  }
  c.expect(inner_mappings_are_automorphisms_check(L).passed(),
           "inner mappings are not automorphisms");
  c.expect(order3_normal_central_check(L).passed(),
           "an order-3 normal generator is not central");
  c.finish();
}

void criterion9() {
  Criterion c("criterion 9: special rank certified in both directions");
  FiniteLoop L = build_cml81();
  RankReport r = special_rank(L);
  c.expect(r.special_rank == 3, "rank of the fixture is not 3");
  c.expect(min_generators(L, make_subloop(L, r.witness_subloop.members)) == 3,
           "rank witness does not need 3 generators");
  for (int k = 1; k <= 4; ++k) {
    FiniteLoop E = build("ea3(" + std::to_string(k) + ")");
    c.expect(special_rank(E).special_rank == k,
             "rank of the rank-" + std::to_string(k) + " elementary abelian group");
  }
  OmegaReport omega = omega_report(L);
  c.expect(omega.d == 3, "whole-loop generator count is not 3");
  c.expect(omega.finite && omega.finitely_generated && omega.max_condition &&
               omega.min_condition && omega.centralizers_finite,
           "finiteness profile has a false entry");
  c.finish();
}

void criterion10() {
  Criterion c("criterion 10: group computations agree with brute-force oracles");
  struct Entry {
    std::string name;
    int degree;
    std::vector<Permutation> gens;
  };
  std::vector<Entry> entries;
  entries.push_back({"c2", 2, {cycle(2, {0, 1})}});
  entries.push_back({"c12", 12, {cycle(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})}});
  entries.push_back({"d4", 4, {cycle(4, {0, 1, 2, 3}), Permutation({3, 2, 1, 0})}});
  entries.push_back({"d5", 5, {cycle(5, {0, 1, 2, 3, 4}), Permutation({0, 4, 3, 2, 1})}});
  entries.push_back({"s3", 3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})}});
  entries.push_back(
      {"a4", 4, {cycle(4, {0, 1, 2}), compose(cycle(4, {0, 1}), cycle(4, {2, 3}))}});
  entries.push_back({"s4", 4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})}});
  entries.push_back({"s5", 5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})}});
  for (const char* text : {"ea3(2)", "cyclic(9)", "product(cyclic(2),cyclic(6))"}) {
    FiniteLoop L = build(text);
    std::vector<Permutation> gens;
    for (int x = 0; x < L.order(); ++x) gens.push_back(left_translation(L, x));
    entries.push_back({std::string("mult of ") + text, L.order(), std::move(gens)});
  }
  c.expect(entries.size() >= 10, "corpus is too small");

  for (const auto& e : entries) {
    auto brute = oracle::group_elements(e.degree, e.gens);
    c.expect(brute.size() <= 10000, e.name + ": oracle corpus out of bounds");
    PermutationGroup G(e.degree, e.gens);

    c.expect(G.order() == brute.size(), e.name + ": order mismatch");
    bool members_ok = true;
    for (const auto& p : brute) members_ok = members_ok && G.member(p);
    for (int i = 0; i < e.degree; ++i)
      for (int j = i + 1; j < e.degree; ++j) {
        Permutation t = cycle(e.degree, {i, j});
        members_ok = members_ok && (G.member(t) == oracle::contains(brute, t));
      }
    c.expect(members_ok, e.name + ": membership mismatch");

    std::vector<Permutation> lib_center = center(G).elements();
    std::sort(lib_center.begin(), lib_center.end());
    c.expect(lib_center == oracle::center_of(brute), e.name + ": center mismatch");

    const Permutation& probe = e.gens.front();
    std::vector<Permutation> lib_centralizer = centralizer_in(G, {probe}).elements();
    std::sort(lib_centralizer.begin(), lib_centralizer.end());
    c.expect(lib_centralizer == oracle::centralizer_of(brute, {probe}),
             e.name + ": centralizer mismatch");

    c.expect(nilpotency_class_group(G) == oracle::nilpotency_class(brute),
             e.name + ": nilpotency class mismatch");
  }
  c.finish();
}

void criterion11() {
  Criterion c("criterion 11: repeated verification output is byte-identical");
  fs::path dir = fs::temp_directory_path() / "moufang_acceptance";
  fs::create_directories(dir);
  fs::path table = dir / "cml81.txt";
  write_loop_file(table.string(), build_cml81());

  auto run = [&](const fs::path& out) -> int {
    std::string cmd = std::string(MOUFANG_CLI_PATH) + " verify --json " + table.string() +
                      " > " + out.string() + " 2> /dev/null";
    int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
  };
  fs::path out_a = dir / "run_a.json";
  fs::path out_b = dir / "run_b.json";
  c.expect(run(out_a) == 0, "first verification run failed");
  c.expect(run(out_b) == 0, "second verification run failed");

  auto canonical = [](const fs::path& p) -> std::string {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    nlohmann::json j = nlohmann::json::parse(ss.str());
    for (auto& r : j) r.erase("time_ms");
    return j.dump();
  };
  std::string a = canonical(out_a);
  std::string b = canonical(out_b);
  c.expect(!a.empty(), "first run produced no reports");
  c.expect(a == b, "verification output differs between runs");
  c.finish();
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();

  double total =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  bool in_budget = total < 300000;
  if (!in_budget) ++failures;
  std::printf("%s total runtime %.0f ms (limit 300000 ms)\n",
              in_budget ? "PASS" : "FAIL", total);
  if (failures == 0) {
    std::printf("all acceptance criteria satisfied\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
