#pragma once

#include <stdexcept>
#include <string>

namespace lepkit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Raised by adj() when C1 * C2^T is singular, i.e. C1 and the dual of C2 meet
// nontrivially.
class NotInvertible : public SingularMatrix {
 public:
  using SingularMatrix::SingularMatrix;
};

class DimMismatch : public Error {
 public:
  using Error::Error;
};

class NoApplicablePlan : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace lepkit
