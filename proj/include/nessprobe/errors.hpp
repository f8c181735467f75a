#pragma once

#include <stdexcept>
#include <string>

namespace nessprobe {

// Base class for every library failure. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters violate a type invariant (negative damping, negative occupation, ...).
class InvalidModel : public Error {
 public:
  using Error::Error;
};

// The drift matrix is not Hurwitz, so there is no unique stationary state.
class NoSteadyState : public Error {
 public:
  using Error::Error;
};

// A closed form hits a removable or genuine singularity at these parameters.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

// Input data is inconsistent with the requested representation.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

// The requested quantity is not defined for this kind of perturbation.
class UnsupportedPerturbation : public Error {
 public:
  using Error::Error;
};

}  // namespace nessprobe
