#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpl {

enum class Errc {
  InvalidParameter,
  MalformedTree,
  NoCanonicalCycle,
  EmptyInput,
  NoPrime,
  SieveLimitExceeded,
  SizeMismatch,
  BoundTooSmall,
  NotPrimeLabeling,
  InvalidHamiltonianData,
  BoundViolated,
  NotCoprime,
  UnsupportedCase,
  NotATree,
  NotFoundWithinBound,
  ParseError,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::MalformedTree: return "MalformedTree";
    case Errc::NoCanonicalCycle: return "NoCanonicalCycle";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NoPrime: return "NoPrime";
    case Errc::SieveLimitExceeded: return "SieveLimitExceeded";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::NotPrimeLabeling: return "NotPrimeLabeling";
    case Errc::InvalidHamiltonianData: return "InvalidHamiltonianData";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::NotATree: return "NotATree";
    case Errc::NotFoundWithinBound: return "NotFoundWithinBound";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tpl
