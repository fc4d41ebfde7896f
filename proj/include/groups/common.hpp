#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace groups {

// Element of a FiniteGroup, always an index into 0..n-1 with 0 = identity.
using Elt = int;

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table validation failures. Each carries the first offending witness.
struct NotLatinSquare : GroupError {
  NotLatinSquare(bool row, int index, const std::string& msg)
      : GroupError(msg), is_row(row), line(index) {}
  bool is_row;
  int line;
};

struct NotAssociative : GroupError {
  NotAssociative(Elt x_, Elt y_, Elt z_, const std::string& msg)
      : GroupError(msg), x(x_), y(y_), z(z_) {}
  Elt x, y, z;
};

struct NoIdentity : GroupError {
  NoIdentity(int index, const std::string& msg) : GroupError(msg), line(index) {}
  int line;
};

struct NotNormal : GroupError {
  using GroupError::GroupError;
};

struct BudgetExceeded : GroupError {
  using GroupError::GroupError;
};

struct OrderCapExceeded : GroupError {
  using GroupError::GroupError;
};

struct InvalidAction : GroupError {
  using GroupError::GroupError;
};

struct NotACocycle : GroupError {
  using GroupError::GroupError;
};

struct NotAnEndomorphism : GroupError {
  using GroupError::GroupError;
};

struct EmptyFamily : GroupError {
  using GroupError::GroupError;
};

struct DuplicateName : GroupError {
  using GroupError::GroupError;
};

struct ParseError : GroupError {
  ParseError(std::string tok, const std::string& msg) : GroupError(msg), token(std::move(tok)) {}
  std::string token;
};

struct ArithmeticOverflow : GroupError {
  using GroupError::GroupError;
};

// Per-operation resource limits. Budgets are deterministic node/step counts,
// not timeouts: a search either finishes or throws BudgetExceeded, it never
// returns a partial answer.
struct SearchBudget {
  std::uint64_t nodes = 100'000'000;  // backtracking search steps
  int endo_max_order = 64;            // locally inner endomorphism enumeration
  int subgroup_max_order = 64;        // All/Nilpotent subgroup enumeration
  int cohomology_max_order = 64;      // h2 / multiplier linear algebra
  int table_max_order = 512;          // default table-construction cap
};

// Hard limit on any multiplication table this library will materialize
// (n^2 entries). Sym(7) is the largest built-in construction.
inline constexpr int kAbsoluteMaxOrder = 5040;

}  // namespace groups
