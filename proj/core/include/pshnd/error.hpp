#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pshnd {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition or argument violations (bad exponents, malformed input, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// Numeric failures: non-finite evaluation, root finder out of iterations.
struct NumericError : Error {
  using Error::Error;
};

// Syntax error with 1-based source position and what would have been legal.
struct ParseError : Error {
  std::size_t line;
  std::size_t column;
  std::string expected;

  ParseError(std::size_t line_, std::size_t column_, const std::string& what_,
             std::string expected_)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + what_ +
              (expected_.empty() ? "" : " (expected " + expected_ + ")")),
        line(line_),
        column(column_),
        expected(std::move(expected_)) {}
};

// The witness search exhausted its slice schedule without a verified hit.
struct WitnessNotFound : Error {
  using Error::Error;
};

}  // namespace pshnd
