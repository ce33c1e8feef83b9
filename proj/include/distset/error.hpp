#pragma once

#include <stdexcept>
#include <string>

namespace distset {

enum class ErrorCode {
    MixedRadicands,
    DivisionByZero,
    InvalidRadicand,
    NotSymmetric,
    NotSquare,
    DimensionMismatch,
    DuplicatePoints,
    InvalidConfiguration,
    NotRealizable,
    WrongS,
    InvalidN,
    InconsistentK,
    NoConvergence,
    IndexOutOfRange,
    RangeError,
    SizeMismatch,
    NotDistanceSet,
    SpectrumMismatch,
    UnsupportedN,
    InvalidQ,
    ParseError,
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

}  // namespace distset
