#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonleighton {

  // Malformed presentation text or an invalid argument coming from outside
  // the library.
  class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class ParseError : public InputError {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : InputError("line " + std::to_string(line) + ", column "
                     + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // A configured resource bound (coset count, index, degree, radius) would be
  // exceeded.
  class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Internal consistency failure: a structural invariant that the
  // construction guarantees did not hold.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace nonleighton
