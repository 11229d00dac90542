#pragma once

#include <stdexcept>
#include <string>

namespace bilax {

// Numeric values are part of the C API (see bilax_c.h) and must not change.
enum class ErrorCode : int {
  DimensionMismatch = 10,
  NotIdempotent = 11,
  RankUnstable = 12,
  InvalidTable = 13,
  ConvergenceFailure = 14,
  NonIntegral = 15,
  SingularPairing = 16,
  ConversionFailure = 17,
  InvalidConfig = 18,
  NotInCentre = 19,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bilax
