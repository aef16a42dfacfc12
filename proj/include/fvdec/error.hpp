#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fvdec {

enum class ErrorCode {
  ZeroDensity,
  UnphysicalState,
  VacuumGenerated,
  NoConvergence,
  Unstable2DConfiguration,
  GridMismatch,
  InvalidArgument,
  SimulationCrash,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fvdec
