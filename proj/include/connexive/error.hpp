#ifndef CONNEXIVE_ERROR_HPP
#define CONNEXIVE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace connexive {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lexical/syntactic failure; carries the byte offset of the offending token
// and the token set that would have been accepted there.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset,
             std::vector<std::string> expected)
      : Error(what), offset(offset), expected(std::move(expected)) {}
  std::size_t offset;
  std::vector<std::string> expected;
};

// Violated precondition on otherwise well-formed input (impossible
// antecedent, inadmissible relations, value out of range, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Internal consistency check failed.  Raised instead of silently rounding
// or guessing; seeing this means a solver invariant did not hold.
struct SolverError : Error {
  explicit SolverError(const std::string& what) : Error(what) {}
};

// The decision procedure exhausted its search without reaching a verdict.
struct UndecidedError : Error {
  explicit UndecidedError(const std::string& what) : Error(what) {}
};

}  // namespace connexive

#endif  // CONNEXIVE_ERROR_HPP
