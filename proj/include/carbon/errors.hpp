#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace carbon {

/// Reason codes surfaced in receipts, CLI output, and storage failures.
enum class ErrorCode : std::uint8_t {
    // transaction envelope
    BadSignature,
    BadNonce,
    UnknownSender,
    MalformedPayload,
    // registry
    DuplicateAccount,
    NameTooLong,
    Unauthorized,
    UnknownAccount,
    RoleMismatch,
    ReservedAddress,
    // carbon token
    ZeroAmount,
    NoVerifiers,
    NotFinalized,
    AlreadyExecuted,
    UnknownSubmission,
    UnknownBurn,
    InsufficientBalance,
    BurnSinkNotTransferable,
    // quorum
    UnknownProposal,
    NotEligible,
    DuplicateVote,
    // amm
    PoolExists,
    NoPool,
    ZeroShares,
    InsufficientShares,
    SlippageExceeded,
    DustOutput,
    Overflow,
    // ledger
    TimestampRegression,
    // serialization and storage
    UnsupportedValue,
    ParseError,
    InvalidQuantity,
    IoError,
    CorruptLine,
    RootMismatch,
};

std::string_view to_string(ErrorCode code);
std::optional<ErrorCode> error_code_from_string(std::string_view name);

class LedgerError : public std::runtime_error {
public:
    explicit LedgerError(ErrorCode code, const std::string& detail = {});

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Log line failure; `line()` is 1-based.
class CorruptLineError : public LedgerError {
public:
    CorruptLineError(std::size_t line, const std::string& detail);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = {}) {
    throw LedgerError(code, detail);
}

}  // namespace carbon
