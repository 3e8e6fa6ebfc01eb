#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkdyn {

// Stable error classes. The CLI maps each class to an exit code and prints
// its name, so the enumerators and names must not be renumbered or renamed.
enum class ErrorKind {
  kParse,
  kSchema,
  kNotSymmetric,
  kDegenerateForm,
  kDimensionMismatch,
  kPrecondition,
  kIsotropicVector,
  kNonIntegral,
  kNotIsometry,
  kUnsupportedSignature,
  kUnexpectedSpectrum,
  kNotHyperbolic,
  kInvalidAlgebraicNumber,
  kAlphaNotExpanding,
  kInvalidDiamond,
  kDegreeOutOfRange,
  kInvalidSpace,
  kIndexOutOfRange,
  kUnknownPreset,
  kPropositionViolated,
  kTheoremViolated,
};

std::string_view error_name(ErrorKind kind);

// 2 = parse/schema, 3 = precondition, 4 = theorem violation (a defect).
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hkdyn
