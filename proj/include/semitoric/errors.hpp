#pragma once

#include <stdexcept>
#include <string>

namespace semitoric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The system fails to be semitoric (E inside the degeneracy band).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical kernel did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace semitoric
