#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kcat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input does not have the shape an operation requires (bad ids, shapes,
/// malformed tables, unlabeled edges, non-face-closed complexes, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class PushoutMissing : public Error {
 public:
  using Error::Error;
};

class ConversionRefused : public Error {
 public:
  using Error::Error;
};

/// A staircase quotient is not among the declared objects.
class EnumerationIncomplete : public Error {
 public:
  using Error::Error;
};

/// d^2 != 0, a twist that is not a cocycle, and similar broken invariants.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NoPotentialDegree : public Error {
 public:
  using Error::Error;
};

/// A region has more sites than the group basis can resolve.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class NonPointlikeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace kcat
