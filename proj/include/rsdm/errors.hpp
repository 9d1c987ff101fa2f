#pragma once

#include <stdexcept>
#include <string>

namespace rsdm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed decimal literal, CSV row or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Dimensionally inconsistent Quantity arithmetic.
class UnitError : public Error {
 public:
  using Error::Error;
};

/// Elapsed time exceeds the series expiry; tokens past E are not redeemable.
class ExpiredSeries : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured subset-count guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsdm
