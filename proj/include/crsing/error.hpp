#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crsing {

enum class ErrorCode {
  // input errors
  DimensionMismatch,
  UnknownVariable,
  ContainsW,
  ConstantTerm,
  NonConstantLeading,
  Syntax,
  IndexOutOfRange,
  MalformedNumber,
  Schema,
  AsymmetricB,
  AsymmetricC,
  EOrderTooLow,
  SingularTransform,
  RequiresNGe2,
  RankNotOne,
  NormalizationRequired,
  InvalidArgument,
  // mathematical negatives
  NotCR,
  NotCRAtDegree,
  NoExtension,
  RankTooLow,
  DegenerateQuadric,
  NotApplicable,
};

std::string_view to_string(ErrorCode code);

/// True for outcomes that answer the mathematical question in the negative
/// (as opposed to malformed input).
bool is_mathematical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<unsigned> degree = std::nullopt)
      : std::runtime_error(message), code_(code), degree_(degree) {}

  ErrorCode code() const noexcept { return code_; }

  /// Homogeneous degree at which the failure was detected, when meaningful.
  std::optional<unsigned> degree() const noexcept { return degree_; }

 private:
  ErrorCode code_;
  std::optional<unsigned> degree_;
};

}  // namespace crsing
