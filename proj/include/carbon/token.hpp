#pragma once

#include <map>
#include <string>
#include <vector>

#include "carbon/state.hpp"

/// Carbon token lifecycle: credit submission, quorum-gated minting,
/// transfer, burn into the sink, and retirement certificates.
///
/// Every mutating function validates all of its preconditions before it
/// writes anything, so a throw leaves the state untouched.
namespace carbon::token {

/// Stores a Pending submission and opens its Mint proposal.
/// Throws RoleMismatch, ZeroAmount, NoVerifiers, UnknownAccount.
CreditSubmission submit_credit(WorldState& state, const Address& holder, std::string project_kind,
                               const Hash32& evidence_hash, Quantity tonnage);

/// Requires the submission's Mint proposal to have reached quorum.
/// Throws UnknownSubmission, NotFinalized, AlreadyExecuted, Overflow.
void execute_mint(WorldState& state, RecordId submission_id);

/// Throws ZeroAmount, InsufficientBalance, UnknownAccount,
/// BurnSinkNotTransferable.
void transfer(WorldState& state, const Address& from, const Address& to, Quantity amount);

/// Moves `amount` into the burn sink immediately and opens a CertifyBurn
/// proposal. Throws ZeroAmount, InsufficientBalance, NoVerifiers.
BurnRecord request_burn(WorldState& state, const Address& owner, Quantity amount);

/// Requires the burn's CertifyBurn proposal to have reached quorum.
/// Throws UnknownBurn, NotFinalized, AlreadyExecuted.
RetirementCertificate issue_certificate(WorldState& state, RecordId burn_id, Height at);

struct BalancesView {
    std::map<Address, Quantity> balances;
    std::map<Address, Quantity> stable_balances;
    Quantity total_minted = 0;
    Quantity burned = 0;
    Quantity stable_total = 0;
    std::vector<RetirementCertificate> certificates;  // ascending id
};

BalancesView query_balances(const WorldState& state);

namespace detail {

// Effects without the quorum check, for the approval that tips a proposal.
void mint_effect(WorldState& state, RecordId submission_id);
RetirementCertificate certificate_effect(WorldState& state, RecordId burn_id, Height at);

}  // namespace detail

// Balance movement shared with the AMM. Zero balances are erased so that
// equal holdings always serialize identically.
void move_carbon(TokenLedger& ledger, const Address& from, const Address& to, Quantity amount);
void move_stable(TokenLedger& ledger, const Address& from, const Address& to, Quantity amount);

}  // namespace carbon::token
