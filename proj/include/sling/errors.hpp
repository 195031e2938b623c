#pragma once

#include <stdexcept>
#include <string>

namespace sling {

// Bad caller input: shape mismatch, out-of-range label, invalid config.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to reach its tolerance. Carries the last
// residual/gap so callers can decide whether to retry.
struct NumericError : std::runtime_error {
  double residual;
  explicit NumericError(const std::string& what, double res = 0.0)
      : std::runtime_error(what), residual(res) {}
};

// Malformed text input; `line` is 1-based.
struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(const std::string& what, std::size_t ln)
      : std::runtime_error(what + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

}  // namespace sling
