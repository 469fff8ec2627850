#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lognet {

enum class Errc {
    // input / validation
    EfficiencyOutOfRange,
    SelfLoop,
    DuplicateArc,
    ConflictingArc,
    InvalidLabel,
    UnknownNode,
    ParseError,
    NonPositiveOutput,
    GainNotAllowed,
    EmptyChain,
    BadBase,
    NegativeLossiness,
    WrongArity,
    CommissionOutOfRange,
    SizeLimitExceeded,
    // structural preconditions
    NotSymmetric,
    NotConnected,
    // no meaningful answer exists
    SomePairUnreachable,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), code_(code), line_(line) {}

    Errc code() const noexcept { return code_; }

    /// 1-based input line the error refers to, 0 when not tied to a file.
    std::size_t line() const noexcept { return line_; }

private:
    Errc code_;
    std::size_t line_;
};

}  // namespace lognet
