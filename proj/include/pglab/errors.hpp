#pragma once

#include <stdexcept>
#include <string>

namespace pglab {

enum class ErrorCode {
    // Cayley table / group validation
    NotLatinSquare,
    NotAssociative,
    NoIdentity,
    PNotPrime,
    PDoesNotDivideOrder,
    // family construction
    BadParameter,
    // file ingestion
    ParseError,
    // graph operations
    VertexOutOfRange,
    TooLargeForExactIso,
    EmptyGraph,
    SetsIntersect,
    // solvers
    InstanceTooLargeForExact,
    // theorem verification
    NotAPGroup,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotLatinSquare: return "NotLatinSquare";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::PNotPrime: return "PNotPrime";
        case ErrorCode::PDoesNotDivideOrder: return "PDoesNotDivideOrder";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::TooLargeForExactIso: return "TooLargeForExactIso";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::SetsIntersect: return "SetsIntersect";
        case ErrorCode::InstanceTooLargeForExact: return "InstanceTooLargeForExact";
        case ErrorCode::NotAPGroup: return "NotAPGroup";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace pglab
