#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqc {

enum class ErrorCode {
  // design-core
  UnknownSelector,
  MissingSubEntity,
  VersionMismatch,
  CrossEntityViolation,
  UnregisteredRequest,
  DuplicateRegistration,
  InvalidArguments,
  ParseError,
  // topology
  InvalidDimension,
  EmptyGateList,
  // circuit-params
  NonPositiveCapacitance,
  NonPositiveInput,
  PhaseOutOfRange,
  NegativeFrequency,
  UnknownLabel,
  NonNegativeOffDiagonal,
  InconsistentTargets,
  // layout
  PitchTooSmall,
  InsufficientFrequencySet,
  MeanderDoesNotFit,
  // routers
  DegenerateGrid,
  NoPath,
  BlockedEndpoint,
  InvalidConfig,
  LengthMismatch,
  SpecInfeasible,
  CorridorExhausted,
  // process-map
  UnresolvableOverlap,
  BridgeCollision,
  UnknownProcess,
  // device-mapper
  TargetNotBracketed,
  MaxIterations,
  ComponentNotTunable,
  EvaluatorFailed,
  // gdsio
  CoordinateOverflow,
  TruncatedRecord,
  BadMagic,
  OddLength,
  // io
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// stable, testable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 protected:
  struct Verbatim {};
  Error(ErrorCode code, const std::string& what, Verbatim) : std::runtime_error(what), code_(code) {}

 private:
  ErrorCode code_;
};

/// Parse failure in a design file or GDS stream. `offset` is the byte offset
/// into the input (npos when only a field path is known).
class ParseFailure : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseFailure(ErrorCode code, std::size_t offset, std::string field_path, const std::string& message)
      : Error(code, message + " (offset " + (offset == npos ? std::string("?") : std::to_string(offset)) +
                        (field_path.empty() ? std::string() : ", field " + field_path) + ")"),
        offset_(offset),
        field_path_(std::move(field_path)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& field_path() const noexcept { return field_path_; }

 private:
  std::size_t offset_;
  std::string field_path_;
};

/// Error raised by a pipeline stage; wraps the original error code.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(cause.code(), "stage '" + stage + "': " + cause.what(), Verbatim{}), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace sqc
