#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walkspec {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedOrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotCospectralError : std::domain_error {
  using std::domain_error::domain_error;
};

// graph6 decode failure; offset is the byte position within the input line.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

}  // namespace walkspec
