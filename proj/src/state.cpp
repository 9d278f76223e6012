#include "carbon/state.hpp"

namespace carbon {

namespace {

template <typename Map>
typename Map::mapped_type lookup_or_zero(const Map& m, const Address& a) {
    auto it = m.find(a);
    return it == m.end() ? 0 : it->second;
}

}  // namespace

Quantity TokenLedger::balance(const Address& a) const { return lookup_or_zero(balances, a); }
Quantity TokenLedger::stable_balance(const Address& a) const { return lookup_or_zero(stable_balances, a); }
Quantity LpShareLedger::of(const Address& a) const { return lookup_or_zero(shares, a); }
std::uint64_t WorldState::nonce_of(const Address& a) const { return lookup_or_zero(nonces, a); }

std::string_view to_string(Role r) {
    switch (r) {
        case Role::Verifier: return "Verifier";
        case Role::CreditHolder: return "CreditHolder";
        case Role::Customer: return "Customer";
        case Role::Admin: return "Admin";
    }
    return "?";
}

std::optional<Role> role_from_string(std::string_view s) {
    for (auto r : {Role::Verifier, Role::CreditHolder, Role::Customer, Role::Admin})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

std::string_view to_string(SubmissionStatus s) {
    switch (s) {
        case SubmissionStatus::Pending: return "Pending";
        case SubmissionStatus::Minted: return "Minted";
        case SubmissionStatus::Rejected: return "Rejected";
    }
    return "?";
}

std::string_view to_string(BurnStatus s) {
    return s == BurnStatus::Certified ? "Certified" : "AwaitingVerification";
}

std::string_view to_string(ProposalKind k) { return k == ProposalKind::Mint ? "Mint" : "CertifyBurn"; }

std::string_view to_string(ProposalStatus s) { return s == ProposalStatus::Open ? "Open" : "Executed"; }

}  // namespace carbon
