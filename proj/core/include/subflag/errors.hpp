#pragma once

#include <stdexcept>
#include <string>

namespace subflag {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects living on different coordinate charts were combined.
class ChartMismatchError : public Error {
 public:
  using Error::Error;
};

/// A chart point lies outside the admissible domain (e.g. sin(2 theta) = 0 on SU(2)).
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// A square system could not be solved: the frame, Gram or metric matrix is singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// r_1 x r_2 vanishes at the requested surface parameter.
class DegenerateSurfaceError : public Error {
 public:
  using Error::Error;
};

/// An argument that must lie in the horizontal distribution span{X, Y} has a Z component.
class NonHorizontalError : public Error {
 public:
  using Error::Error;
};

/// Malformed request: unknown group, missing parameters, bad grid or filter.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace subflag
