#pragma once

#include <stdexcept>
#include <string>

namespace mormatch {

/// Stable error classes. The numeric value doubles as the CLI exit code,
/// so values must never be reordered once released.
enum class ErrorCode : int {
    ParseError = 2,
    SingularResolvent = 3,
    ConvergenceFailure = 4,
    BadDegree = 5,
    NotConjugateClosed = 6,
    ObservabilityFailure = 7,
    DuplicateFrequency = 8,
    SpectraOverlap = 9,
    IllConditioned = 10,
    PlacementFailure = 11,
    UnstableA = 12,
    StepTooLarge = 13,
    SingularShift = 14,
    RankDeficient = 15,
    DimensionMismatch = 16,
    NotAdmissible = 17,
    RankDeficientX = 18,
    ZeroAtOrigin = 19,
    PoleAtOrigin = 20,
    EmbeddingFailure = 21,
    VerificationFailure = 22,
    UsageError = 23,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace mormatch
