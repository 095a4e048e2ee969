#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qstat {

// Domain errors carry a stable code used by the CLI for diagnostics and exit
// status. Precondition violations throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  std::string_view code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Requested more fermions than levels; Pauli exclusion leaves no state.
class FermionOverfill : public Error {
 public:
  explicit FermionOverfill(const std::string& message)
      : Error("FermionOverfill", message) {}
};

// Enumeration would exceed the configured support cap.
class StateSpaceTooLarge : public Error {
 public:
  explicit StateSpaceTooLarge(const std::string& message)
      : Error("StateSpaceTooLarge", message) {}
};

// Conditioning discarded every support vector.
class EmptyConditioning : public Error {
 public:
  explicit EmptyConditioning(const std::string& message)
      : Error("EmptyConditioning", message) {}
};

// Conditioning on an observation the ensemble assigns probability zero.
class ZeroProbabilityDraw : public Error {
 public:
  explicit ZeroProbabilityDraw(const std::string& message)
      : Error("ZeroProbabilityDraw", message) {}
};

// Rejection sampling never matched the requested condition.
class NoAcceptedTrials : public Error {
 public:
  explicit NoAcceptedTrials(const std::string& message)
      : Error("NoAcceptedTrials", message) {}
};

}  // namespace qstat
