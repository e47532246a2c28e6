#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace moufang {

// Knobs for the exhaustive-vs-sampled scans.  A scan runs exhaustively while
// the total case count stays within exhaustive_budget, otherwise it draws
// `samples` seeded cases.  subset_samples is the analogous count for scans
// whose unit is a generating subset rather than a tuple.
struct ScanPolicy {
  std::uint64_t exhaustive_budget = 100'000'000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::uint64_t subset_samples = 1000;
};

inline constexpr std::uint64_t kDefaultEnumLimit = 1'000'000;

/// Pass/fail-with-witness result of one identity or lemma verification.
struct CheckReport {
  enum class Status { Pass, Fail, Skipped };
  enum class Mode { Exhaustive, Sampled };
  static constexpr Mode Exhaustive = Mode::Exhaustive;
  static constexpr Mode Sampled = Mode::Sampled;

  std::string check;
  Status status = Status::Pass;
  std::string reason;  // set when status == Skipped
  Mode mode = Mode::Exhaustive;
  std::uint64_t count = 0;  // cases actually checked
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<int>> counterexample;
  std::string detail;  // human-readable extras, not part of the JSON contract
  double time_ms = 0.0;

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }

  static CheckReport pass(std::string name, Mode mode, std::uint64_t count);
  static CheckReport fail(std::string name, Mode mode, std::uint64_t count,
                          std::vector<int> witness);
  static CheckReport skipped(std::string name, std::string reason);

  CheckReport& with_seed(std::uint64_t s) {
    seed = s;
    return *this;
  }
  CheckReport& with_detail(std::string d) {
    detail = std::move(d);
    return *this;
  }
  CheckReport& named(std::string name) {
    check = std::move(name);
    return *this;
  }
};

nlohmann::ordered_json report_json(const CheckReport& r);
nlohmann::ordered_json reports_json(const std::vector<CheckReport>& rs);
std::string report_line(const CheckReport& r);

}  // namespace moufang
