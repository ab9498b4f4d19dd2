#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cover_spectra {

enum class ErrorKind {
  // exact arithmetic
  DivideByZero,
  NotDivisible,
  ZeroPolynomial,
  DegreeTooLarge,
  EndpointIsRoot,
  // graph model and enumeration
  InputError,
  UnknownVertex,
  SameVertex,
  GraphTooLarge,
  NotAPath,
  // polynomials
  NonVanishingImaginaryPart,
  MissingCycleWeight,
  FiniteValueUnavailable,
  PoleAtSample,
  // structure checks and searches
  NotInsideCriticalComponent,
  FrontierTooLarge,
  InvalidCertificate,
  PreconditionViolated,
  ExhaustedWithoutWitness,
  NotCritical,
  IsATree,
  Disconnected,
  AomotoSubsetExists,
  NotFactorCritical,
  NotAdjacent,
  // covers and generators
  CoverTooLarge,
  BallTooLarge,
  RejectionBudgetExceeded,
  // a theorem-backed identity failed to hold: always a bug
  InternalInvariant,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NonVanishingImaginaryPart: return "NonVanishingImaginaryPart";
    case ErrorKind::MissingCycleWeight: return "MissingCycleWeight";
    case ErrorKind::FiniteValueUnavailable: return "FiniteValueUnavailable";
    case ErrorKind::PoleAtSample: return "PoleAtSample";
    case ErrorKind::NotInsideCriticalComponent: return "NotInsideCriticalComponent";
    case ErrorKind::FrontierTooLarge: return "FrontierTooLarge";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ExhaustedWithoutWitness: return "ExhaustedWithoutWitness";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::IsATree: return "IsATree";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::AomotoSubsetExists: return "AomotoSubsetExists";
    case ErrorKind::NotFactorCritical: return "NotFactorCritical";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::CoverTooLarge: return "CoverTooLarge";
    case ErrorKind::BallTooLarge: return "BallTooLarge";
    case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// Errors that mean "the input is fine but exceeds a configured size cap".
constexpr bool is_cap_exceeded(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::GraphTooLarge:
    case ErrorKind::FrontierTooLarge:
    case ErrorKind::CoverTooLarge:
    case ErrorKind::BallTooLarge:
    case ErrorKind::DegreeTooLarge:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace cover_spectra
