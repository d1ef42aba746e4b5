#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpspec {

enum class ErrorCode {
  InvalidSpace,        // space parameters violate their invariants or the op rejects the space
  InvalidArgument,     // generic precondition failure
  NonConvergent,       // quadrature tail/tolerance could not be met
  NotInSpace,          // Fourier-side density is not in the weighted L^2 space
  OutsideFamily,       // function not representable in the closed-form family
  IdentityMap,
  NotSelfMap,
  NotBounded,
  NotCanonical,
  WrongForm,
  GridMismatch,
  WindowViolation,
  MembershipViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::NotInSpace: return "NotInSpace";
    case ErrorCode::OutsideFamily: return "OutsideFamily";
    case ErrorCode::IdentityMap: return "IdentityMap";
    case ErrorCode::NotSelfMap: return "NotSelfMap";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::WrongForm: return "WrongForm";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::WindowViolation: return "WindowViolation";
    case ErrorCode::MembershipViolation: return "MembershipViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hpspec
