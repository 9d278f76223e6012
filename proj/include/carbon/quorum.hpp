#pragma once

#include <cstdint>
#include <vector>

#include "carbon/state.hpp"

/// Multi-signature approval: proposals execute automatically once at least
/// 70% of the verifiers accredited at opening time approve.
namespace carbon::quorum {

/// ceil(numerator * n / denominator) in integers. Throws NoVerifiers for n = 0.
std::uint64_t required_approvals(std::uint64_t n_verifiers, const QuorumConfig& config = {});

/// Snapshots the accredited verifier set. Throws NoVerifiers.
Proposal open_proposal(WorldState& state, ProposalKind kind, RecordId subject_id);

struct ApprovalTally {
    std::uint64_t count = 0;
    std::uint64_t needed = 0;
    ProposalStatus status = ProposalStatus::Open;

    friend bool operator==(const ApprovalTally&, const ApprovalTally&) = default;
};

struct ApprovalOutcome {
    ApprovalTally tally;
    /// Certificate id when this vote issued one.
    std::optional<RecordId> certificate_id;
};

/// Records the vote and, if it reaches the threshold, runs the mint or
/// certificate effect in the same call. Throws UnknownProposal,
/// AlreadyExecuted, NotEligible, DuplicateVote, plus any effect error.
ApprovalOutcome cast_approval(WorldState& state, const Address& verifier, RecordId proposal_id, Height at);

/// Throws UnknownProposal.
ApprovalTally tally(const WorldState& state, RecordId proposal_id);

bool has_reached_quorum(const Proposal& p, const QuorumConfig& config);

}  // namespace carbon::quorum
