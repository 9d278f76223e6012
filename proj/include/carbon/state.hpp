#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "carbon/bytes.hpp"

namespace carbon {

using Height = std::uint64_t;
using RecordId = std::uint64_t;

// Admin exists only as the genesis trust root; it cannot be registered by
// transaction.
enum class Role : std::uint8_t { Verifier, CreditHolder, Customer, Admin };

struct AccountRecord {
    Address id;
    Role role = Role::Customer;
    Bytes public_key;
    std::string display_name;
    bool accredited = false;
    Height registered_at = 0;

    friend bool operator==(const AccountRecord&, const AccountRecord&) = default;
};

inline constexpr std::size_t kMaxDisplayNameBytes = 128;

struct TokenLedger {
    std::map<Address, Quantity> balances;
    Quantity total_minted = 0;
    std::map<Address, Quantity> stable_balances;
    Quantity stable_total = 0;

    [[nodiscard]] Quantity balance(const Address& a) const;
    [[nodiscard]] Quantity stable_balance(const Address& a) const;

    friend bool operator==(const TokenLedger&, const TokenLedger&) = default;
};

enum class SubmissionStatus : std::uint8_t { Pending, Minted, Rejected };

struct CreditSubmission {
    RecordId id = 0;
    Address holder;
    std::string project_kind;
    Hash32 evidence_hash;
    Quantity tonnage = 0;
    SubmissionStatus status = SubmissionStatus::Pending;
    RecordId proposal_id = 0;

    friend bool operator==(const CreditSubmission&, const CreditSubmission&) = default;
};

enum class BurnStatus : std::uint8_t { AwaitingVerification, Certified };

struct BurnRecord {
    RecordId id = 0;
    Address owner;
    Quantity tonnage = 0;
    BurnStatus status = BurnStatus::AwaitingVerification;
    RecordId proposal_id = 0;

    friend bool operator==(const BurnRecord&, const BurnRecord&) = default;
};

struct RetirementCertificate {
    RecordId id = 0;
    Address owner;
    Quantity tonnage = 0;
    RecordId burn_id = 0;
    Height issued_at = 0;

    friend bool operator==(const RetirementCertificate&, const RetirementCertificate&) = default;
};

enum class ProposalKind : std::uint8_t { Mint, CertifyBurn };
enum class ProposalStatus : std::uint8_t { Open, Executed };

struct Proposal {
    RecordId id = 0;
    ProposalKind kind = ProposalKind::Mint;
    RecordId subject_id = 0;
    std::set<Address> eligible_verifiers;
    std::set<Address> approvals;
    ProposalStatus status = ProposalStatus::Open;

    friend bool operator==(const Proposal&, const Proposal&) = default;
};

/// At least numerator/denominator of the eligible verifiers must approve.
struct QuorumConfig {
    std::uint64_t threshold_numerator = 7;
    std::uint64_t threshold_denominator = 10;

    friend bool operator==(const QuorumConfig&, const QuorumConfig&) = default;
};

struct LiquidityPool {
    Quantity carbon_reserve = 0;
    Quantity stable_reserve = 0;
    std::uint64_t fee_numerator = 997;
    std::uint64_t fee_denominator = 1000;

    friend bool operator==(const LiquidityPool&, const LiquidityPool&) = default;
};

struct LpShareLedger {
    std::map<Address, Quantity> shares;
    Quantity total_shares = 0;

    [[nodiscard]] Quantity of(const Address& a) const;

    friend bool operator==(const LpShareLedger&, const LpShareLedger&) = default;
};

/// Next id to hand out per record family. Ids start at 1 and are never reused.
struct IdCounters {
    RecordId next_submission = 1;
    RecordId next_burn = 1;
    RecordId next_proposal = 1;
    RecordId next_certificate = 1;

    friend bool operator==(const IdCounters&, const IdCounters&) = default;
};

struct WorldState {
    std::string chain_id;
    Address admin;
    QuorumConfig quorum;
    std::map<Address, AccountRecord> accounts;
    std::map<Address, std::uint64_t> nonces;
    TokenLedger token;
    std::map<RecordId, CreditSubmission> submissions;
    std::map<RecordId, BurnRecord> burns;
    std::map<RecordId, RetirementCertificate> certificates;
    std::map<RecordId, Proposal> proposals;
    std::optional<LiquidityPool> pool;
    LpShareLedger lp_shares;
    IdCounters counters;

    [[nodiscard]] std::uint64_t nonce_of(const Address& a) const;

    friend bool operator==(const WorldState&, const WorldState&) = default;
};

std::string_view to_string(Role r);
std::optional<Role> role_from_string(std::string_view s);
std::string_view to_string(SubmissionStatus s);
std::string_view to_string(BurnStatus s);
std::string_view to_string(ProposalKind k);
std::string_view to_string(ProposalStatus s);

}  // namespace carbon
