#pragma once

#include <memory>
#include <string>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

/// A recipe for a built-in loop: cyclic(n), ea3(k) (elementary abelian
/// 3-group of rank k), cml81, or product(a,b) of two recipes.
struct ConstructionSpec {
  enum class Kind { Cyclic, ElementaryAbelian3, Cml81, Product };
  Kind kind = Kind::Cyclic;
  int param = 1;  // n for cyclic, k for ea3
  std::shared_ptr<ConstructionSpec> left, right;  // product factors

  int resolved_order() const;
  std::string to_string() const;
  /// Grammar: cyclic(n) | ea3(k) | cml81 | product(spec,spec).
  static ConstructionSpec parse(const std::string& text);
};

/// Deterministic table construction; every result passes the full CML scan
/// before being returned (constructions are certified, not trusted).
FiniteLoop build(const ConstructionSpec& spec);
FiniteLoop build(const std::string& spec_text);

/// The order-81 fixture alone: GF(3)^4 with
/// (a,b,c,d)*(a',b',c',d') = (a+a', b+b', c+c', d+d'+(a-a')(bc'-b'c)),
/// elements indexed lexicographically so 0 is the identity.
FiniteLoop build_cml81();

/// Standard generator indices for build_cml81(): e1, e2, e3.
std::vector<int> cml81_generators();

}  // namespace moufang
