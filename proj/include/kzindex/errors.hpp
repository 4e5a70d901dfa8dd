#pragma once

#include <stdexcept>
#include <string>

namespace kz {

// Base of every error raised by the library. Callers that only care about
// success/failure catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class InvalidDirection : public Error {
 public:
  using Error::Error;
};

// A crossing landed on a square edge or vertex and no admissible offset
// of the core curves resolved it.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

class BasisUnavailable : public Error {
 public:
  using Error::Error;
};

class NoBasisFound : public Error {
 public:
  using Error::Error;
};

class IntegralityError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class UnimodularityError : public Error {
 public:
  using Error::Error;
};

class IndexExceedsCap : public Error {
 public:
  using Error::Error;
};

}  // namespace kz
