#pragma once

#include <stdexcept>
#include <string>

namespace resum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class IndeterminateError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroSeries : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// No admissible stationary point on the positive real axis.
class NoStationaryPoint : public Error {
 public:
  using Error::Error;
};

/// Neither derivative has a positive real zero to select from.
class NoCandidate : public Error {
 public:
  using Error::Error;
};

}  // namespace resum
