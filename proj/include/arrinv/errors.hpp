#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrinv {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hyperplane was given the zero vector as its normal.
struct ZeroNormalError : Error {
  using Error::Error;
};

// Two input hyperplanes canonicalize to the same hyperplane.  Duplicates are
// rejected rather than merged: the defining polynomial must be squarefree.
struct DuplicateHyperplaneError : Error {
  DuplicateHyperplaneError(std::size_t first, std::size_t second)
      : Error("duplicate hyperplane: index " + std::to_string(second) +
              " equals index " + std::to_string(first)),
        first_index(first),
        second_index(second) {}
  std::size_t first_index;
  std::size_t second_index;
};

struct IndexError : Error {
  using Error::Error;
};

// Two independent computation routes disagree.  Always a bug, never a
// property of the input.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

// A dimension sequence's tail does not match any polynomial of the allowed
// degree.
struct NotEventuallyPolynomialError : Error {
  using Error::Error;
};

// d! times the leading Hilbert coefficient is not a positive integer.
struct NonIntegralMultiplicityError : Error {
  using Error::Error;
};

// Malformed input file.  line == 0 means no line information is available.
struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& msg)
      : Error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  std::size_t line;
};

}  // namespace arrinv
