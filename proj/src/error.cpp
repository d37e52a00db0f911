#include "argtrace/error.hpp"

namespace argtrace {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::CycleFound: return "CycleFound";
        case ErrorCode::UnknownArgument: return "UnknownArgument";
        case ErrorCode::DuplicateArgument: return "DuplicateArgument";
        case ErrorCode::IncompleteDialogue: return "IncompleteDialogue";
        case ErrorCode::InvalidArgumentId: return "InvalidArgumentId";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::UnknownFluent: return "UnknownFluent";
        case ErrorCode::UnknownEvent: return "UnknownEvent";
        case ErrorCode::ConflictingEffects: return "ConflictingEffects";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::HorizonExceeded: return "HorizonExceeded";
        case ErrorCode::InvalidContext: return "InvalidContext";
        case ErrorCode::InvalidSetting: return "InvalidSetting";
        case ErrorCode::NotFinal: return "NotFinal";
        case ErrorCode::TargetNotTrue: return "TargetNotTrue";
        case ErrorCode::TargetNotInTrace: return "TargetNotInTrace";
        case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
        case ErrorCode::QuerySyntax: return "QuerySyntax";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SolverUnavailable: return "SolverUnavailable";
        case ErrorCode::SolverParseError: return "SolverParseError";
        case ErrorCode::SolverDisagreement: return "SolverDisagreement";
    }
    return "Unknown";
}

}  // namespace argtrace
