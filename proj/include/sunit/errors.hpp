#pragma once

#include <stdexcept>
#include <string>

namespace sunit {

// Base of every error raised by the library. The CLI maps InputError to exit
// code 2 and VerificationError to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user-supplied data such as malformed text or a non-prime S entry.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidShapeError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidPrimeError : public InputError {
 public:
  using InputError::InputError;
};

class ZeroElementError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// p-adic precision was exhausted before a quantity could be certified.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Requested a closed form outside the range where it is available (c < 1).
class UnsupportedBranchError : public Error {
 public:
  using Error::Error;
};

// A mathematical check came out false. This is the "falsified" outcome, not
// a programming error.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sunit
