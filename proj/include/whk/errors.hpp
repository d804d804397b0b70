#pragma once

#include <stdexcept>
#include <string>

namespace whk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class DimMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

class AntipodeNotInvertible : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class DegenerateDatum : public Error {
 public:
  using Error::Error;
};

class NotAGroupoid : public Error {
 public:
  using Error::Error;
};

class NotAnIso : public Error {
 public:
  using Error::Error;
};

class WellDefinednessFailure : public Error {
 public:
  using Error::Error;
};

class NoDualIntegral : public Error {
 public:
  using Error::Error;
};

class NoNondegenerateIntegral : public Error {
 public:
  using Error::Error;
};

class DatumMismatch : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace whk
