#pragma once

#include <stdexcept>
#include <string>

#include "fracsum/types.hpp"

namespace fracsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or argument (table size, degree cap, level count, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A function was evaluated outside its domain. Carries the offending point.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, Complex point);
  Complex point() const noexcept { return point_; }

 private:
  Complex point_;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A factor of a fractional product landed on the closed negative real axis.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

std::string format_complex(Complex z);

}  // namespace fracsum
