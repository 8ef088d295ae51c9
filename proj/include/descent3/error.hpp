#pragma once

#include <stdexcept>
#include <string>

namespace descent3 {

enum class Errc {
  ZeroInput,
  BadPrime,
  NotCoprime,
  FactorizationBudget,
  NotSquarefree,
  DegenerateDiscriminant,
  GcdViolation,
  FieldMismatch,
  CubeInput,
  NotOnNormEquation,
  NotUnimodular,
  ReducibleForm,
  ZeroDiscriminant,
  CountNotOfExpectedShape,
  ReduciblePolynomial,
  DiscriminantMismatch,
  CurveMismatch,
  OffCurve,
  KernelXZero,
  DegenerateDenominator,
  TorsionImage,
  PreimageMissing,
  PositiveDiscriminant,
  ExcludedDiscriminant,
  InconsistentInputs,
  InvalidArgument,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

// Errors that indicate a bug or a broken mathematical invariant rather than
// bad user input. The CLI maps these to exit code 3.
bool is_internal_inconsistency(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace descent3
