#include "sqc/error.hpp"

namespace sqc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSelector: return "UnknownSelector";
    case ErrorCode::MissingSubEntity: return "MissingSubEntity";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::CrossEntityViolation: return "CrossEntityViolation";
    case ErrorCode::UnregisteredRequest: return "UnregisteredRequest";
    case ErrorCode::DuplicateRegistration: return "DuplicateRegistration";
    case ErrorCode::InvalidArguments: return "InvalidArguments";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::EmptyGateList: return "EmptyGateList";
    case ErrorCode::NonPositiveCapacitance: return "NonPositiveCapacitance";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::PhaseOutOfRange: return "PhaseOutOfRange";
    case ErrorCode::NegativeFrequency: return "NegativeFrequency";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NonNegativeOffDiagonal: return "NonNegativeOffDiagonal";
    case ErrorCode::InconsistentTargets: return "InconsistentTargets";
    case ErrorCode::PitchTooSmall: return "PitchTooSmall";
    case ErrorCode::InsufficientFrequencySet: return "InsufficientFrequencySet";
    case ErrorCode::MeanderDoesNotFit: return "MeanderDoesNotFit";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::BlockedEndpoint: return "BlockedEndpoint";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SpecInfeasible: return "SpecInfeasible";
    case ErrorCode::CorridorExhausted: return "CorridorExhausted";
    case ErrorCode::UnresolvableOverlap: return "UnresolvableOverlap";
    case ErrorCode::BridgeCollision: return "BridgeCollision";
    case ErrorCode::UnknownProcess: return "UnknownProcess";
    case ErrorCode::TargetNotBracketed: return "TargetNotBracketed";
    case ErrorCode::MaxIterations: return "MaxIterations";
    case ErrorCode::ComponentNotTunable: return "ComponentNotTunable";
    case ErrorCode::EvaluatorFailed: return "EvaluatorFailed";
    case ErrorCode::CoordinateOverflow: return "CoordinateOverflow";
    case ErrorCode::TruncatedRecord: return "TruncatedRecord";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sqc
