#pragma once

// Exception types shared by all modules. DomainError covers bad arguments
// and violated preconditions; CapError covers word-size and enumeration
// budget refusals.

#include <stdexcept>

namespace codelen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InfeasibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DistanceTooSmallError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace codelen
