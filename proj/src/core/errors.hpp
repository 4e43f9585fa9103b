#pragma once

#include <stdexcept>
#include <string>

namespace thetakit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series, product or root-finder exhausted its term/iteration budget.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

}  // namespace thetakit
