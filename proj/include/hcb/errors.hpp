#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcb {

/// Malformed or inconsistent input (filtration files, vertex functions,
/// barcode files). `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A face of a simplex is not present in the complex index.
class MissingFaceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operator was applied to a chain of the wrong degree.
class DegreeMismatchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal algorithmic state contradicts a proven invariant; indicates a bug
/// or corrupted state rather than bad input.
class InvariantViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hcb
