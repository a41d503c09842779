#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fourcol {

/// Raised when a series needs a convention that cannot support the operation
/// (for example reverting a series with a nonzero constant term).
class UnsupportedConvention : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical estimate (fit, extrapolation, enclosure) could not be produced.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fourcol
