#include "gagola/error.hpp"

namespace gagola {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::MixedFields: return "MixedFields";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::IncompatibleElements: return "IncompatibleElements";
    case Errc::NotNormal: return "NotNormal";
    case Errc::PNotDividing: return "PNotDividing";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PrimeSearchExceeded: return "PrimeSearchExceeded";
    case Errc::LiftInconsistent: return "LiftInconsistent";
    case Errc::MultipleGagolaCharacters: return "MultipleGagolaCharacters";
    case Errc::AbelianGroup: return "AbelianGroup";
    case Errc::TrivialOrFull: return "TrivialOrFull";
    case Errc::ConditionDisagreement: return "ConditionDisagreement";
    case Errc::DAndEDisagree: return "DAndEDisagree";
    case Errc::NotTwoGagola: return "NotTwoGagola";
    case Errc::InvalidTheta: return "InvalidTheta";
    case Errc::MixedGroups: return "MixedGroups";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::RelationFailed: return "RelationFailed";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::NotFrobeniusComplement: return "NotFrobeniusComplement";
    case Errc::Overflow: return "Overflow";
    case Errc::NotDivisor: return "NotDivisor";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gagola
