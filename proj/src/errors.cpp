#include "carbon/errors.hpp"

#include <array>
#include <utility>

namespace carbon {

namespace {

constexpr std::array kNames = {
    std::pair{ErrorCode::BadSignature, std::string_view{"BadSignature"}},
    std::pair{ErrorCode::BadNonce, std::string_view{"BadNonce"}},
    std::pair{ErrorCode::UnknownSender, std::string_view{"UnknownSender"}},
    std::pair{ErrorCode::MalformedPayload, std::string_view{"MalformedPayload"}},
    std::pair{ErrorCode::DuplicateAccount, std::string_view{"DuplicateAccount"}},
    std::pair{ErrorCode::NameTooLong, std::string_view{"NameTooLong"}},
    std::pair{ErrorCode::Unauthorized, std::string_view{"Unauthorized"}},
    std::pair{ErrorCode::UnknownAccount, std::string_view{"UnknownAccount"}},
    std::pair{ErrorCode::RoleMismatch, std::string_view{"RoleMismatch"}},
    std::pair{ErrorCode::ReservedAddress, std::string_view{"ReservedAddress"}},
    std::pair{ErrorCode::ZeroAmount, std::string_view{"ZeroAmount"}},
    std::pair{ErrorCode::NoVerifiers, std::string_view{"NoVerifiers"}},
    std::pair{ErrorCode::NotFinalized, std::string_view{"NotFinalized"}},
    std::pair{ErrorCode::AlreadyExecuted, std::string_view{"AlreadyExecuted"}},
    std::pair{ErrorCode::UnknownSubmission, std::string_view{"UnknownSubmission"}},
    std::pair{ErrorCode::UnknownBurn, std::string_view{"UnknownBurn"}},
    std::pair{ErrorCode::InsufficientBalance, std::string_view{"InsufficientBalance"}},
    std::pair{ErrorCode::BurnSinkNotTransferable, std::string_view{"BurnSinkNotTransferable"}},
    std::pair{ErrorCode::UnknownProposal, std::string_view{"UnknownProposal"}},
    std::pair{ErrorCode::NotEligible, std::string_view{"NotEligible"}},
    std::pair{ErrorCode::DuplicateVote, std::string_view{"DuplicateVote"}},
    std::pair{ErrorCode::PoolExists, std::string_view{"PoolExists"}},
    std::pair{ErrorCode::NoPool, std::string_view{"NoPool"}},
    std::pair{ErrorCode::ZeroShares, std::string_view{"ZeroShares"}},
    std::pair{ErrorCode::InsufficientShares, std::string_view{"InsufficientShares"}},
    std::pair{ErrorCode::SlippageExceeded, std::string_view{"SlippageExceeded"}},
    std::pair{ErrorCode::DustOutput, std::string_view{"DustOutput"}},
    std::pair{ErrorCode::Overflow, std::string_view{"Overflow"}},
    std::pair{ErrorCode::TimestampRegression, std::string_view{"TimestampRegression"}},
    std::pair{ErrorCode::UnsupportedValue, std::string_view{"UnsupportedValue"}},
    std::pair{ErrorCode::ParseError, std::string_view{"ParseError"}},
    std::pair{ErrorCode::InvalidQuantity, std::string_view{"InvalidQuantity"}},
    std::pair{ErrorCode::IoError, std::string_view{"IoError"}},
    std::pair{ErrorCode::CorruptLine, std::string_view{"CorruptLine"}},
    std::pair{ErrorCode::RootMismatch, std::string_view{"RootMismatch"}},
};

std::string compose(ErrorCode code, const std::string& detail) {
    std::string msg{to_string(code)};
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
    for (const auto& [c, name] : kNames)
        if (c == code) return name;
    return "Unknown";
}

std::optional<ErrorCode> error_code_from_string(std::string_view name) {
    for (const auto& [c, n] : kNames)
        if (n == name) return c;
    return std::nullopt;
}

LedgerError::LedgerError(ErrorCode code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

CorruptLineError::CorruptLineError(std::size_t line, const std::string& detail)
    : LedgerError(ErrorCode::CorruptLine, "line " + std::to_string(line) + ": " + detail),
      line_(line) {}

}  // namespace carbon
