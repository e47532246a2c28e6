#pragma once

#include <cstdint>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/report.hpp"

namespace moufang {

struct VerifyOptions {
  ScanPolicy policy;
  int max_gens = 3;  // generating-set size bound for the class-bound check
  /// Subloop-lattice checks (rank, maximal subloops) are expensive; Auto
  /// enables them up to order 81, On forces them, Off skips them.
  enum class Rank { Auto, On, Off };
  Rank rank = Rank::Auto;
  std::uint64_t enum_limit = kDefaultEnumLimit;
};

/// Runs every identity and lemma check against one loop.  Reports come back
/// sorted by check name; checks whose hypotheses the input fails are marked
/// skipped rather than failed.
std::vector<CheckReport> verify_suite(const FiniteLoop& L, const VerifyOptions& opts = {});

/// True when no report failed (skips do not fail the suite).
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace moufang
