#ifndef M2COH_ERRORS_HPP
#define M2COH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace m2coh {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid user input (bad prime, malformed lambda, reducible modulus, ...).
/// The CLI maps these to exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

class NotPrimeError : public InputError {
public:
  explicit NotPrimeError(unsigned long long n)
      : InputError("not a prime: " + std::to_string(n)) {}
};

class ReducibleModulusError : public InputError {
public:
  using InputError::InputError;
};

class CharTooSmallError : public InputError {
public:
  explicit CharTooSmallError(unsigned long long p)
      : InputError("algebra constructions require characteristic >= 5, got " +
                   std::to_string(p)) {}
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

class DivisionByZeroError : public Error {
public:
  DivisionByZeroError() : Error("division by zero in the field") {}
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

class GradeOutOfRangeError : public Error {
public:
  using Error::Error;
};

class ImageNotContainedError : public Error {
public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
  using Error::Error;
};

class NotACocycleError : public Error {
public:
  using Error::Error;
};

class UnknownClaimError : public Error {
public:
  using Error::Error;
};

} // namespace m2coh

#endif
