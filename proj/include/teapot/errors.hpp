#pragma once

#include <stdexcept>
#include <string>

namespace teapot {

// Base for every computation failure raised by the library. Invalid
// arguments (bad lengths, out-of-range growth rates) use std::invalid_argument.
class TeapotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An orbit point stayed within its error bound of the critical point 1/lambda
// at the highest permitted precision and could not be confirmed as an exact hit.
class PrecisionExhausted : public TeapotError {
 public:
  using TeapotError::TeapotError;
};

class PeriodUndetected : public TeapotError {
 public:
  using TeapotError::TeapotError;
};

// Parry polynomials are only defined for words of positive cumulative sign.
class NegativeSignWord : public TeapotError {
 public:
  using TeapotError::TeapotError;
};

class NonConvergence : public TeapotError {
 public:
  using TeapotError::TeapotError;
};

class MarginInsufficient : public TeapotError {
 public:
  using TeapotError::TeapotError;
};

// |z| is numerically indistinguishable from 1 but z is not exactly on the circle.
class AmbiguousModulus : public TeapotError {
 public:
  using TeapotError::TeapotError;
};

}  // namespace teapot
