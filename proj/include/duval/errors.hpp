#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace duval {

/// Out-of-range parameter (ADE index, cut-off level, tolerance, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial text that does not match the grammar. `position` is the
/// zero-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A dual graph (or graph document) violating one of the named invariants.
class GraphError : public std::runtime_error {
 public:
  GraphError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// The intersection form is not negative definite, so no fundamental cycle exists.
class NotNegativeDefiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force oracle failure (bound too small, or a non-unique minimum).
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace duval
