#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moufang/constructions.hpp"
#include "moufang/errors.hpp"
#include "moufang/io.hpp"
#include "moufang/loop.hpp"
#include "moufang/mult_group.hpp"
#include "moufang/report.hpp"
#include "moufang/structure.hpp"
#include "moufang/verify.hpp"

namespace {

using namespace moufang;
using nlohmann::ordered_json;

FiniteLoop load_loop(const std::string& path) {
  if (path == "-") return read_loop(std::cin);
  return read_loop_file(path);
}

// "1,2,3" or "1 2 3" -> {1,2,3}
std::vector<int> parse_element_list(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream ss(normalized);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad element index '" + tok + "'");
    }
  }
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad value for " + what + ": '" + text + "'");
  }
}

// Output goes to stdout unless a path is given.
void emit(const std::string& out_path, const std::string& payload) {
  if (out_path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot open " + out_path + " for writing");
  f << payload;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Heavy subloop-lattice work follows the same gate as the verify suite:
// automatic up to order 81, explicit --rank beyond.
bool lattice_enabled(const FiniteLoop& L, bool rank_flag) {
  return rank_flag || L.order() <= 81;
}

constexpr int kMaxMultOrder = 300;  // stabilizer chains get heavy beyond this

int cmd_validate(const std::string& path) {
  FiniteLoop L = load_loop(path);
  std::cout << "valid loop: order " << L.order() << ", identity " << L.identity() << "\n";
  return 0;
}

int cmd_construct(const std::string& spec, const std::string& out_path) {
  FiniteLoop L = build(spec);
  std::ostringstream ss;
  write_loop(ss, L);
  emit(out_path, ss.str());
  return 0;
}

int cmd_analyze(const std::string& path, bool rank_flag, bool json,
                const std::string& out_path) {
  FiniteLoop L = load_loop(path);
  const int n = L.order();
  ordered_json j;
  j["order"] = n;
  j["identity"] = L.identity();
  j["commutative"] = is_commutative(L).passed();
  j["associative"] = is_associative(L).passed();
  j["cml"] = L.cml();
  j["exponent"] = L.exponent();
  if (L.cml()) {
    Subloop Z = loop_center(L);
    j["center_order"] = Z.order();
    std::optional<int> cls = nilpotency_class_loop(L);
    if (cls) j["nilpotency_class"] = *cls;
  }
  if (n <= kMaxMultOrder) {
    PermutationGroup M = multiplication_group(L);
    j["mult_order"] = M.order();
    j["inner_order"] = PermutationGroup(n, M.bsgs().stabilizer_generators(1)).order();
  }
  if (lattice_enabled(L, rank_flag)) {
    RankReport r = special_rank(L);
    j["special_rank"] = r.special_rank;
    j["min_generators"] = min_generators(L, make_subloop_all(L));
    j["subloop_count"] = r.subloop_count;
  }
  std::ostringstream ss;
  if (json) {
    ss << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items()) {
      ss << key << ": " << (value.is_boolean() ? yesno(value.get<bool>()) : value.dump())
         << "\n";
    }
  }
  emit(out_path, ss.str());
  return 0;
}

int cmd_multgroup(const std::string& path, bool json, const std::string& out_path) {
  FiniteLoop L = load_loop(path);
  if (L.order() > kMaxMultOrder) {
    throw TooLarge("multiplication group analysis is limited to order " +
                   std::to_string(kMaxMultOrder));
  }
  MultGroupInvariants inv = mult_group_invariants(L);
  ordered_json j;
  j["order"] = inv.order;
  j["inner_order"] = inv.inner_order;
  j["transitive"] = inv.transitive;
  j["three_group"] = inv.three_group;
  if (inv.center_order) j["center_order"] = *inv.center_order;
  if (inv.nilpotency_class) j["nilpotency_class"] = *inv.nilpotency_class;
  if (inv.center_quotient_three_group) {
    j["center_quotient_three_group"] = *inv.center_quotient_three_group;
  }
  if (!inv.notes.empty()) j["notes"] = inv.notes;
  std::ostringstream ss;
  if (json) {
    ss << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items()) {
      ss << key << ": " << (value.is_boolean() ? yesno(value.get<bool>()) : value.dump())
         << "\n";
    }
  }
  emit(out_path, ss.str());
  return 0;
}

int cmd_centralizer(const std::string& path, const std::string& subloop_csv,
                    const std::string& set_csv, bool json, const std::string& out_path) {
  FiniteLoop L = load_loop(path);
  Subloop H = subloop_csv.empty() ? make_subloop_all(L)
                                  : generate(L, parse_element_list(subloop_csv));
  std::vector<int> M = parse_element_list(set_csv);
  Subloop Z = centralizer(L, H, M);
  std::ostringstream ss;
  if (json) {
    ordered_json j;
    j["subloop_order"] = H.order();
    j["set"] = M;
    j["centralizer_order"] = Z.order();
    j["members"] = Z.members;
    ss << j.dump(2) << "\n";
  } else {
    ss << "subloop order: " << H.order() << "\n";
    ss << "centralizer order: " << Z.order() << "\n";
    ss << "members:";
    for (int m : Z.members) ss << " " << m;
    ss << "\n";
  }
  emit(out_path, ss.str());
  return 0;
}

int cmd_verify(const std::string& path, const VerifyOptions& opts, bool json,
               const std::string& out_path) {
  FiniteLoop L = load_loop(path);
  std::vector<CheckReport> reports = verify_suite(L, opts);
  std::ostringstream ss;
  if (json) {
    ss << reports_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) ss << report_line(r) << "\n";
  }
  emit(out_path, ss.str());
  return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite commutative Moufang loop toolkit"};
  app.require_subcommand(1);

  std::string path = "-";
  std::string out_path = "-";
  std::string spec;
  std::string subloop_csv;
  std::string set_csv;
  bool json = false;
  bool rank_flag = false;
  VerifyOptions vopts;
  if (const char* env = std::getenv("MOUFANG_BUDGET")) {
    try {
      vopts.policy.exhaustive_budget = parse_u64(env, "MOUFANG_BUDGET");
    } catch (const moufang::InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  CLI::App* validate = app.add_subcommand("validate", "check that a file is a loop table");
  validate->add_option("path", path, "table file, or - for stdin");

  CLI::App* construct = app.add_subcommand("construct", "emit a built-in loop table");
  construct->add_option("spec", spec, "cyclic(n) | ea3(k) | cml81 | product(a,b)")->required();
  construct->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* analyze = app.add_subcommand("analyze", "basic invariants of a loop");
  analyze->add_option("path", path, "table file, or - for stdin");
  analyze->add_flag("--json", json, "machine-readable output");
  analyze->add_flag("--rank", rank_flag, "force the subloop-lattice computation");
  analyze->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* multgroup = app.add_subcommand("multgroup", "multiplication group invariants");
  multgroup->add_option("path", path, "table file, or - for stdin");
  multgroup->add_flag("--json", json, "machine-readable output");
  multgroup->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* centralizer_cmd =
      app.add_subcommand("centralizer", "centralizer of a set inside a subloop");
  centralizer_cmd->add_option("path", path, "table file, or - for stdin");
  centralizer_cmd->add_option("--subloop", subloop_csv,
                              "generators of the ambient subloop (default: whole loop)");
  centralizer_cmd->add_option("--set", set_csv, "elements to centralize (default: empty)");
  centralizer_cmd->add_flag("--json", json, "machine-readable output");
  centralizer_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run every identity and lemma check");
  verify->add_option("path", path, "table file, or - for stdin");
  verify->add_flag("--json", json, "machine-readable output");
  verify->add_flag("--rank", rank_flag, "force the subloop-lattice checks");
  verify->add_option("--seed", vopts.policy.seed, "sampling seed");
  verify->add_option("--budget", vopts.policy.exhaustive_budget,
                     "max case count for exhaustive scans");
  verify->add_option("--samples", vopts.policy.samples, "sample count for sampled scans");
  verify->add_option("--max-gens", vopts.max_gens,
                     "generating-set size bound for the class-bound check");
  verify->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (construct->parsed()) return cmd_construct(spec, out_path);
    if (analyze->parsed()) return cmd_analyze(path, rank_flag, json, out_path);
    if (multgroup->parsed()) return cmd_multgroup(path, json, out_path);
    if (centralizer_cmd->parsed()) {
      return cmd_centralizer(path, subloop_csv, set_csv, json, out_path);
    }
    if (verify->parsed()) {
      if (rank_flag) vopts.rank = VerifyOptions::Rank::On;
      return cmd_verify(path, vopts, json, out_path);
    }
  } catch (const moufang::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const moufang::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const moufang::InvariantViolation& e) {
    // A cited structural fact failed on this instance; that is a check
    // failure with the witness in the message.
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
