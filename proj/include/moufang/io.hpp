#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/perm.hpp"

namespace moufang {

/// Cayley-table text format: line 1 = n, then n rows of n space-separated
/// 0-based indices.  The identity is auto-detected, not required at index 0.
FiniteLoop read_loop(std::istream& in);
FiniteLoop read_loop_file(const std::string& path);
void write_loop(std::ostream& out, const FiniteLoop& L);
void write_loop_file(const std::string& path, const FiniteLoop& L);

/// Permutation format: one line of d space-separated images.
Permutation read_permutation(std::istream& in);
void write_permutation(std::ostream& out, const Permutation& p);

/// Group format: a degree line followed by one permutation per line.
std::vector<Permutation> read_generators(std::istream& in);
void write_generators(std::ostream& out, int degree, const std::vector<Permutation>& gens);

}  // namespace moufang
