#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iconrate {

enum class ErrorCode {
  MalformedInput,
  MissingPosePoint,
  BadHandArity,
  EmptySequence,
  DegenerateShoulders,
  NoseOnAxis,
  DegenerateHand,
  NoWristData,
  NoHands,
  UnknownSymbol,
  MalformedProduction,
  BothHandsEmpty,
  LabelerFailure,
  MalformedCorpus,
  DuplicateId,
  RatingOutOfRange,
  Io,
  DimensionMismatch,
  ZeroVector,
  NoSharedHands,
  BadRound,
  BadConfig,
  MalformedLine,
  InconsistentDimension,
  EmptyTable,
  OutOfVocabulary,
  MissingManualRating,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace iconrate
