#pragma once

#include <stdexcept>
#include <string>

namespace ringcat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: parameter out of range, malformed occupation, bad mode index.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A request the analytic machinery does not cover (e.g. the closed flow form with unequal J).
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

/// A numerical postcondition failed: non-Hermitian input, eigen residual too large,
/// singular resolvent, non-converged self-consistency.
class NumericalContractError : public Error {
 public:
  using Error::Error;
};

/// Raised by the Löwdin elimination when λ hits an eigenvalue of the eliminated block.
class NearResonanceError : public NumericalContractError {
 public:
  NearResonanceError(const std::string& what, std::string offending_state)
      : NumericalContractError(what), offending_state_(std::move(offending_state)) {}
  const std::string& offending_state() const noexcept { return offending_state_; }

 private:
  std::string offending_state_;
};

}  // namespace ringcat
