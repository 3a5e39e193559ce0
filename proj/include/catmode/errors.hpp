#pragma once

#include <stdexcept>
#include <string>

namespace catmode {

// Base for every domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series hit max_terms_per_axis while its tail was still above tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Amplitude mass reached the edge of the truncated Fock space.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

// The superposition vanishes identically at this parameter point.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

class CutoffMismatch : public Error {
 public:
  using Error::Error;
};

// Mandel Q requested at (numerically) zero mean photon number.
class UndefinedMandel : public Error {
 public:
  using Error::Error;
};

}  // namespace catmode
