#pragma once

#include <stdexcept>
#include <string>

namespace pdq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input shapes, spaces or arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotHermitian : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Fock truncation is too small for the requested state or evolution.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, int suggested_dim)
      : Error(what), suggested_dim_(suggested_dim) {}
  int suggested_dim() const noexcept { return suggested_dim_; }

 private:
  int suggested_dim_;
};

/// Parameters fall outside the regime where a formula is defined.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Numerical procedure failed (fit failure, sampling violation, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdq
