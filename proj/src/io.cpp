#include "moufang/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "moufang/errors.hpp"

namespace moufang {

namespace {

// Reads the next non-empty line; comments are not part of the format.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) return true;
  }
  return false;
}

std::vector<int> parse_ints(const std::string& line, const std::string& what) {
  std::istringstream ss(line);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw FormatError("bad integer '" + tok + "' in " + what);
      out.push_back(v);
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError("bad integer '" + tok + "' in " + what);
    }
  }
  return out;
}

int parse_size_line(std::istream& in, const std::string& what) {
  std::string line;
  if (!next_line(in, line)) throw FormatError("missing size line in " + what);
  std::vector<int> vals = parse_ints(line, what);
  if (vals.size() != 1) throw FormatError("size line must hold one integer in " + what);
  if (vals[0] <= 0) throw FormatError("size must be positive in " + what);
  return vals[0];
}

}  // namespace

FiniteLoop read_loop(std::istream& in) {
  int n = parse_size_line(in, "loop table");
  if (n > kMaxLoopOrder) throw SizeOverflow("loop order exceeds the supported maximum");
  std::vector<std::vector<int>> rows;
  rows.reserve(n);
  std::string line;
  for (int i = 0; i < n; ++i) {
    if (!next_line(in, line)) throw FormatError("expected " + std::to_string(n) + " table rows");
    std::vector<int> row = parse_ints(line, "table row " + std::to_string(i));
    if (static_cast<int>(row.size()) != n) {
      throw FormatError("table row " + std::to_string(i) + " has " +
                        std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    rows.push_back(std::move(row));
  }
  return FiniteLoop(rows);
}

FiniteLoop read_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_loop(in);
}

void write_loop(std::ostream& out, const FiniteLoop& L) {
  const int n = L.order();
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << L.mul(a, b);
    out << "\n";
  }
}

void write_loop_file(const std::string& path, const FiniteLoop& L) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  write_loop(out, L);
}

Permutation read_permutation(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw FormatError("missing permutation line");
  std::vector<int> images = parse_ints(line, "permutation");
  if (images.empty()) throw FormatError("empty permutation line");
  return Permutation(std::move(images));
}

void write_permutation(std::ostream& out, const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) out << (i ? " " : "") << p[i];
  out << "\n";
}

std::vector<Permutation> read_generators(std::istream& in) {
  int degree = parse_size_line(in, "generator list");
  std::vector<Permutation> gens;
  std::string line;
  while (next_line(in, line)) {
    std::vector<int> images = parse_ints(line, "permutation");
    if (static_cast<int>(images.size()) != degree) {
      throw FormatError("permutation has " + std::to_string(images.size()) +
                        " images, expected " + std::to_string(degree));
    }
    gens.emplace_back(std::move(images));
  }
  return gens;
}

void write_generators(std::ostream& out, int degree, const std::vector<Permutation>& gens) {
  out << degree << "\n";
  for (const auto& g : gens) write_permutation(out, g);
}

}  // namespace moufang
