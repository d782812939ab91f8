#pragma once

#include <stdexcept>
#include <string>

namespace sanon {

// Error taxonomy shared by every module. The CLI maps categories to exit
// codes (usage=1, data=2, numeric=3).
enum class ErrorCode {
  // audio / file format
  NotWav,
  UnsupportedEncoding,
  TruncatedFile,
  IoFailure,
  // configuration / usage
  ConfigInvalid,
  IndexOutOfRange,
  LabelOutOfRange,
  // shape / contract violations
  DimensionMismatch,
  LengthMismatch,
  ScaleMismatch,
  EmptyContour,
  InputTooShort,
  TooFewSamples,
  // data layer
  ParseError,
  DuplicateUtteranceId,
  MissingAudio,
  UtteranceTooShort,
  DataMissing,
  EmptyManifest,
  // model / checkpoint
  CheckpointInvalid,
  TeacherUntrained,
  PoolTooSmall,
  MissingEmbedding,
  // evaluation
  DegenerateTrials,
  InsufficientVoicedFrames,
  // numerics
  NonFiniteTerm,
  NonFiniteLoss,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Exit-code category used by the CLI: 1 usage, 2 data, 3 numeric.
int error_exit_code(ErrorCode code);

}  // namespace sanon
