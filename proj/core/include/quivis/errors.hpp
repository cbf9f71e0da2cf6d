#pragma once

#include <stdexcept>
#include <string>

namespace quivis {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class NotHermitian : public Error {
  public:
    using Error::Error;
};

class NotUnitary : public Error {
  public:
    using Error::Error;
};

class NotProjector : public Error {
  public:
    using Error::Error;
};

class UnknownMoment : public Error {
  public:
    using Error::Error;
};

class BackwardInterval : public Error {
  public:
    using Error::Error;
};

class InvalidPartition : public Error {
  public:
    using Error::Error;
};

class DuplicateValues : public Error {
  public:
    using Error::Error;
};

class ParameterOutOfRange : public Error {
  public:
    using Error::Error;
};

class InvalidAxis : public Error {
  public:
    using Error::Error;
};

/// Malformed scenario input (not valid JSON at all).
class SyntaxError : public Error {
  public:
    using Error::Error;
};

/// Well-formed scenario input that violates the schema or the model
/// invariants. The message always starts with the offending field path.
class ValidationError : public Error {
  public:
    using Error::Error;
};

} // namespace quivis
