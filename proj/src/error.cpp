#include "hkdyn/error.hpp"

namespace hkdyn {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kDegenerateForm: return "DegenerateForm";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kPrecondition: return "PreconditionFailed";
    case ErrorKind::kIsotropicVector: return "IsotropicVector";
    case ErrorKind::kNonIntegral: return "NonIntegral";
    case ErrorKind::kNotIsometry: return "NotIsometry";
    case ErrorKind::kUnsupportedSignature: return "UnsupportedSignature";
    case ErrorKind::kUnexpectedSpectrum: return "UnexpectedSpectrum";
    case ErrorKind::kNotHyperbolic: return "NotHyperbolic";
    case ErrorKind::kInvalidAlgebraicNumber: return "InvalidAlgebraicNumber";
    case ErrorKind::kAlphaNotExpanding: return "AlphaNotExpanding";
    case ErrorKind::kInvalidDiamond: return "InvalidDiamond";
    case ErrorKind::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::kInvalidSpace: return "InvalidSpace";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kUnknownPreset: return "UnknownPreset";
    case ErrorKind::kPropositionViolated: return "PropositionViolated";
    case ErrorKind::kTheoremViolated: return "TheoremViolated";
  }
  return "UnknownError";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kSchema:
    case ErrorKind::kUnknownPreset:
      return 2;
    case ErrorKind::kPropositionViolated:
    case ErrorKind::kTheoremViolated:
      return 4;
    default:
      return 3;
  }
}

}  // namespace hkdyn
