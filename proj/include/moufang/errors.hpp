#pragma once

#include <stdexcept>
#include <string>

namespace moufang {

// Base classes map onto CLI exit codes: InputError -> 2, LimitError -> 3.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// A cited structural fact failed on a concrete instance.  This never fires
// on valid inputs; if it does, the witness in the message is the interesting
// part.
class InvariantViolation : public std::runtime_error {
public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

class FormatError : public InputError {
public:
  explicit FormatError(const std::string& what) : InputError("format error: " + what) {}
};

class NotLatinSquare : public InputError {
public:
  NotLatinSquare(bool row, int index, int value)
      : InputError("not a Latin square: " + std::string(row ? "row " : "column ") +
                   std::to_string(index) + " repeats value " + std::to_string(value)),
        in_row(row), line_index(index), repeated_value(value) {}
  explicit NotLatinSquare(const std::string& what)
      : InputError("not a Latin square: " + what), in_row(false), line_index(-1), repeated_value(-1) {}
  bool in_row;
  int line_index;
  int repeated_value;
};

class NoIdentity : public InputError {
public:
  NoIdentity() : InputError("table has no two-sided identity element") {}
};

class NotCML : public InputError {
public:
  explicit NotCML(const std::string& what) : InputError("not a commutative Moufang loop: " + what) {}
};

class NotNormal : public InputError {
public:
  explicit NotNormal(const std::string& what) : InputError("subloop is not normal: " + what) {}
};

class DegreeMismatch : public InputError {
public:
  DegreeMismatch(int lhs, int rhs)
      : InputError("permutation degree mismatch: " + std::to_string(lhs) + " vs " +
                   std::to_string(rhs)) {}
};

class SizeOverflow : public LimitError {
public:
  explicit SizeOverflow(const std::string& what) : LimitError("size overflow: " + what) {}
};

class TooLarge : public LimitError {
public:
  explicit TooLarge(const std::string& what) : LimitError("too large: " + what) {}
};

class BudgetExceeded : public LimitError {
public:
  explicit BudgetExceeded(const std::string& what) : LimitError("budget exceeded: " + what) {}
};

// Centralizer closure or maximal-subloop normality failed; carries a witness.
class ClosureViolation : public InvariantViolation {
public:
  explicit ClosureViolation(const std::string& what)
      : InvariantViolation("centralizer closure violated: " + what) {}
};

class NormalityViolation : public InvariantViolation {
public:
  explicit NormalityViolation(const std::string& what)
      : InvariantViolation("maximal subloop not normal: " + what) {}
};

}  // namespace moufang
