#include "qsrm/error.hpp"

namespace qsrm {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSquare:
            return "NotSquare";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::NegativeEigenvalue:
            return "NegativeEigenvalue";
        case ErrorCode::NotPSD:
            return "NotPSD";
        case ErrorCode::DimensionTooSmall:
            return "DimensionTooSmall";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace qsrm
