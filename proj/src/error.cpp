#include "descent3/error.hpp"

namespace descent3 {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::FactorizationBudget: return "FactorizationBudget";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case Errc::GcdViolation: return "GcdViolation";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::CubeInput: return "CubeInput";
    case Errc::NotOnNormEquation: return "NotOnNormEquation";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ReducibleForm: return "ReducibleForm";
    case Errc::ZeroDiscriminant: return "ZeroDiscriminant";
    case Errc::CountNotOfExpectedShape: return "CountNotOfExpectedShape";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DiscriminantMismatch: return "DiscriminantMismatch";
    case Errc::CurveMismatch: return "CurveMismatch";
    case Errc::OffCurve: return "OffCurve";
    case Errc::KernelXZero: return "KernelXZero";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::TorsionImage: return "TorsionImage";
    case Errc::PreimageMissing: return "PreimageMissing";
    case Errc::PositiveDiscriminant: return "PositiveDiscriminant";
    case Errc::ExcludedDiscriminant: return "ExcludedDiscriminant";
    case Errc::InconsistentInputs: return "InconsistentInputs";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_internal_inconsistency(Errc code) noexcept {
  switch (code) {
    case Errc::CountNotOfExpectedShape:
    case Errc::PreimageMissing:
    case Errc::DegenerateDenominator:
    case Errc::InconsistentInputs:
      return true;
    default:
      return false;
  }
}

}  // namespace descent3
