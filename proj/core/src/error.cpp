#include "codemix/error.hpp"

namespace codemix {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::EmptyText: return "EmptyText";
        case ErrorCode::EmptyProfileSet: return "EmptyProfileSet";
        case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
        case ErrorCode::MalformedProfile: return "MalformedProfile";
        case ErrorCode::EmptyTokens: return "EmptyTokens";
        case ErrorCode::InvalidTag: return "InvalidTag";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InsufficientPopulation: return "InsufficientPopulation";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptyMatrix: return "EmptyMatrix";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroExpected: return "ZeroExpected";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
    }
    return "Unknown";
}

}  // namespace codemix
