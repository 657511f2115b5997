#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace genspin {

// Shortest readable form for messages ("%g").
inline std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Bad input: dimension mismatch, non-finite data, out-of-range parameters,
// malformed descriptors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative solver failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + short_number(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace genspin
