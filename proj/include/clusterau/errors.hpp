#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clusterau {

/// Operands built over different numbers of variables or generators.
class DimensionMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by exact division when no Laurent-polynomial quotient exists.
class NotDivisible : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A c-matrix column with strictly mixed signs. Never expected; signals a bug.
class SignCoherenceError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number, or 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace clusterau
