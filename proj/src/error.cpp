#include "iconrate/error.hpp"

namespace iconrate {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::MissingPosePoint: return "MissingPosePoint";
    case ErrorCode::BadHandArity: return "BadHandArity";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::DegenerateShoulders: return "DegenerateShoulders";
    case ErrorCode::NoseOnAxis: return "NoseOnAxis";
    case ErrorCode::DegenerateHand: return "DegenerateHand";
    case ErrorCode::NoWristData: return "NoWristData";
    case ErrorCode::NoHands: return "NoHands";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::MalformedProduction: return "MalformedProduction";
    case ErrorCode::BothHandsEmpty: return "BothHandsEmpty";
    case ErrorCode::LabelerFailure: return "LabelerFailure";
    case ErrorCode::MalformedCorpus: return "MalformedCorpus";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::RatingOutOfRange: return "RatingOutOfRange";
    case ErrorCode::Io: return "Io";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NoSharedHands: return "NoSharedHands";
    case ErrorCode::BadRound: return "BadRound";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::InconsistentDimension: return "InconsistentDimension";
    case ErrorCode::EmptyTable: return "EmptyTable";
    case ErrorCode::OutOfVocabulary: return "OutOfVocabulary";
    case ErrorCode::MissingManualRating: return "MissingManualRating";
  }
  return "Unknown";
}

}  // namespace iconrate
