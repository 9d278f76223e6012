#include "carbon/quorum.hpp"

#include "carbon/arith.hpp"
#include "carbon/errors.hpp"
#include "carbon/registry.hpp"
#include "carbon/token.hpp"

namespace carbon::quorum {

std::uint64_t required_approvals(std::uint64_t n_verifiers, const QuorumConfig& config) {
    if (n_verifiers == 0) fail(ErrorCode::NoVerifiers);
    u128 scaled = checked_mul(u128{config.threshold_numerator}, u128{n_verifiers});
    return narrow_u64((scaled + config.threshold_denominator - 1) / config.threshold_denominator);
}

bool has_reached_quorum(const Proposal& p, const QuorumConfig& config) {
    if (p.eligible_verifiers.empty()) return false;
    return p.approvals.size() >= required_approvals(p.eligible_verifiers.size(), config);
}

Proposal open_proposal(WorldState& state, ProposalKind kind, RecordId subject_id) {
    auto eligible = registry::accredited_verifiers(state);
    if (eligible.empty()) fail(ErrorCode::NoVerifiers);

    Proposal p;
    p.id = state.counters.next_proposal;
    p.kind = kind;
    p.subject_id = subject_id;
    p.eligible_verifiers = std::move(eligible);
    p.status = ProposalStatus::Open;

    state.counters.next_proposal += 1;
    state.proposals.emplace(p.id, p);
    return p;
}

ApprovalOutcome cast_approval(WorldState& state, const Address& verifier, RecordId proposal_id, Height at) {
    auto it = state.proposals.find(proposal_id);
    if (it == state.proposals.end()) fail(ErrorCode::UnknownProposal, std::to_string(proposal_id));
    const Proposal& current = it->second;
    if (current.status == ProposalStatus::Executed) fail(ErrorCode::AlreadyExecuted);
    if (!current.eligible_verifiers.contains(verifier)) fail(ErrorCode::NotEligible, verifier.hex());
    if (current.approvals.contains(verifier)) fail(ErrorCode::DuplicateVote, verifier.hex());

    Proposal updated = current;
    updated.approvals.insert(verifier);

    ApprovalOutcome outcome;
    if (has_reached_quorum(updated, state.quorum)) {
        // The effect either throws before writing or completes; the vote is
        // recorded only after it succeeds.
        if (updated.kind == ProposalKind::Mint) {
            token::detail::mint_effect(state, updated.subject_id);
        } else {
            outcome.certificate_id = token::detail::certificate_effect(state, updated.subject_id, at).id;
        }
        updated.status = ProposalStatus::Executed;
    }
    it->second = std::move(updated);
    outcome.tally = tally(state, proposal_id);
    return outcome;
}

ApprovalTally tally(const WorldState& state, RecordId proposal_id) {
    auto it = state.proposals.find(proposal_id);
    if (it == state.proposals.end()) fail(ErrorCode::UnknownProposal, std::to_string(proposal_id));
    const auto& p = it->second;
    return ApprovalTally{p.approvals.size(), required_approvals(p.eligible_verifiers.size(), state.quorum),
                         p.status};
}

}  // namespace carbon::quorum
