#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gagola {

enum class Errc {
  NonPrimeCharacteristic,
  ReduciblePolynomial,
  MixedFields,
  ZeroInverse,
  ZeroElement,
  CapExceeded,
  IncompatibleElements,
  NotNormal,
  PNotDividing,
  HypothesisViolated,
  PrimeSearchExceeded,
  LiftInconsistent,
  MultipleGagolaCharacters,
  AbelianGroup,
  TrivialOrFull,
  ConditionDisagreement,
  DAndEDisagree,
  NotTwoGagola,
  InvalidTheta,
  MixedGroups,
  ZeroScalar,
  NotAutomorphism,
  RelationFailed,
  UnsupportedN,
  NotFrobeniusComplement,
  Overflow,
  NotDivisor,
  ParseError,
  UnknownSuite,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace gagola
