#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicrit {

enum class ErrorCode {
  kParse,
  kInvariant,
  kBadParams,
  kDimension,
  kIterationLimit,
  kConfigExplosion,
  kInfeasibleClp,
  kInvalidAssignment,
  kNoPlantedWitness,
  kNonIntegralDummyCount,
  kMissingWitness,
  kTooLarge,
  kMismatch,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch on the category.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bicrit
