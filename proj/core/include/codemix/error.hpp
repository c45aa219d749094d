#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace codemix {

enum class ErrorCode {
    InvalidConfig,
    EmptyCorpus,
    EmptyText,
    EmptyProfileSet,
    UnsupportedVersion,
    MalformedProfile,
    EmptyTokens,
    InvalidTag,
    ParseError,
    MissingField,
    IoError,
    InsufficientPopulation,
    EmptyInput,
    LengthMismatch,
    EmptyMatrix,
    DimensionMismatch,
    ZeroExpected,
    DomainError,
    InvalidSpec,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace codemix
