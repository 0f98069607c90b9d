#pragma once

#include <stdexcept>
#include <string>

namespace kw {

/// Malformed input: bad arguments, invalid face descriptions, shape mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested combination of parameters has no implemented engine.
class UnsupportedRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite window (delta depth, root closure, affine depth) was too small
/// for the result to be certified.
class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic failure on a well-formed input, e.g. inverting a singular matrix.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kw
