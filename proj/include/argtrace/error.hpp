#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace argtrace {

enum class ErrorCode {
    CycleFound,
    UnknownArgument,
    DuplicateArgument,
    IncompleteDialogue,
    InvalidArgumentId,
    TooLarge,
    UnknownFluent,
    UnknownEvent,
    ConflictingEffects,
    PreconditionViolated,
    HorizonExceeded,
    InvalidContext,
    InvalidSetting,
    NotFinal,
    TargetNotTrue,
    TargetNotInTrace,
    WindowOutOfRange,
    QuerySyntax,
    ParseError,
    SolverUnavailable,
    SolverParseError,
    SolverDisagreement,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace argtrace
