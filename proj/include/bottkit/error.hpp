#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bottkit {

// Invalid input for a well-formed request: non-dominant weights, partitions
// outside a rectangle, out-of-range indices.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Schur/wedge index exceeding the rank of the factor it is applied to.
class RankError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bottkit
