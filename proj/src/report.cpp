#include "moufang/report.hpp"

#include <sstream>

namespace moufang {

CheckReport CheckReport::pass(std::string name, Mode mode, std::uint64_t count) {
  CheckReport r;
  r.check = std::move(name);
  r.status = Status::Pass;
  r.mode = mode;
  r.count = count;
  return r;
}

CheckReport CheckReport::fail(std::string name, Mode mode, std::uint64_t count,
                              std::vector<int> witness) {
  CheckReport r;
  r.check = std::move(name);
  r.status = Status::Fail;
  r.mode = mode;
  r.count = count;
  r.counterexample = std::move(witness);
  return r;
}

CheckReport CheckReport::skipped(std::string name, std::string reason) {
  CheckReport r;
  r.check = std::move(name);
  r.status = Status::Skipped;
  r.reason = std::move(reason);
  r.count = 0;
  return r;
}

namespace {

const char* status_str(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::Pass:
      return "pass";
    case CheckReport::Status::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

}  // namespace

nlohmann::ordered_json report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = status_str(r.status);
  if (r.status == CheckReport::Status::Skipped) j["reason"] = r.reason;
  j["mode"] = r.mode == CheckReport::Mode::Exhaustive ? "exhaustive" : "sampled";
  j["count"] = r.count;
  if (r.seed) j["seed"] = *r.seed;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  j["time_ms"] = r.time_ms;
  return j;
}

nlohmann::ordered_json reports_json(const std::vector<CheckReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr;
}

std::string report_line(const CheckReport& r) {
  std::ostringstream os;
  os << "[" << status_str(r.status) << "] " << r.check;
  if (r.status == CheckReport::Status::Skipped) {
    os << " (" << r.reason << ")";
    return os.str();
  }
  os << " " << (r.mode == CheckReport::Mode::Exhaustive ? "exhaustive" : "sampled");
  os << " n=" << r.count;
  if (r.seed) os << " seed=" << *r.seed;
  if (r.counterexample) {
    os << " counterexample=(";
    for (size_t i = 0; i < r.counterexample->size(); ++i)
      os << (i ? "," : "") << (*r.counterexample)[i];
    os << ")";
  }
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

}  // namespace moufang
