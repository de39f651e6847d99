#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsrm {

enum class ErrorCode {
    NotSquare,
    NotHermitian,
    NoConvergence,
    NegativeEigenvalue,
    NotPSD,
    DimensionTooSmall,
    DimensionMismatch,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Thrown by every numeric routine in the library. `code()` identifies the
/// failed contract; `what()` carries the detail.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &detail);

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace qsrm
