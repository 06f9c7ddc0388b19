#pragma once

#include <stdexcept>
#include <string>

namespace invcs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested truncation cannot hold the state to the tail target.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// |z| lies on or outside the family's finite convergence disk.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The normalization series diverges for this z (radius of convergence 0).
class DivergentNormalization : public Error {
 public:
  using Error::Error;
};

/// The large-n probe sequence never settled on zero, a finite limit or growth.
class NonConvergentProbe : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Mandel Q requested for a state with <n> = 0.
class VacuumState : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace invcs
