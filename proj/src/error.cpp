#include "crsing/error.hpp"

namespace crsing {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ContainsW: return "ContainsW";
    case ErrorCode::ConstantTerm: return "ConstantTerm";
    case ErrorCode::NonConstantLeading: return "NonConstantLeading";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::AsymmetricB: return "AsymmetricB";
    case ErrorCode::AsymmetricC: return "AsymmetricC";
    case ErrorCode::EOrderTooLow: return "EOrderTooLow";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::RequiresNGe2: return "RequiresNGe2";
    case ErrorCode::RankNotOne: return "RankNotOne";
    case ErrorCode::NormalizationRequired: return "NormalizationRequired";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotCR: return "NotCR";
    case ErrorCode::NotCRAtDegree: return "NotCRAtDegree";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::RankTooLow: return "RankTooLow";
    case ErrorCode::DegenerateQuadric: return "DegenerateQuadric";
    case ErrorCode::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

bool is_mathematical(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCR:
    case ErrorCode::NotCRAtDegree:
    case ErrorCode::NoExtension:
    case ErrorCode::RankTooLow:
    case ErrorCode::DegenerateQuadric:
    case ErrorCode::NotApplicable:
      return true;
    default:
      return false;
  }
}

}  // namespace crsing
