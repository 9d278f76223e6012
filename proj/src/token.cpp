#include "carbon/token.hpp"

#include "carbon/arith.hpp"
#include "carbon/errors.hpp"
#include "carbon/quorum.hpp"
#include "carbon/registry.hpp"

namespace carbon::token {

namespace {

void move_between(std::map<Address, Quantity>& balances, const Address& from, const Address& to, Quantity amount) {
    auto from_it = balances.find(from);
    Quantity have = from_it == balances.end() ? 0 : from_it->second;
    if (have < amount) fail(ErrorCode::InsufficientBalance, std::to_string(have) + " < " + std::to_string(amount));
    if (from == to || amount == 0) return;
    auto to_it = balances.find(to);
    Quantity new_to = checked_add(to_it == balances.end() ? 0 : to_it->second, amount);

    from_it->second -= amount;
    if (from_it->second == 0) balances.erase(from_it);
    balances[to] = new_to;
}

const Proposal& proposal_of(const WorldState& state, RecordId id) {
    auto it = state.proposals.find(id);
    if (it == state.proposals.end()) fail(ErrorCode::UnknownProposal, std::to_string(id));
    return it->second;
}

bool finalized(const WorldState& state, RecordId proposal_id) {
    const auto& p = proposal_of(state, proposal_id);
    return p.status == ProposalStatus::Executed || quorum::has_reached_quorum(p, state.quorum);
}

}  // namespace

void move_carbon(TokenLedger& ledger, const Address& from, const Address& to, Quantity amount) {
    move_between(ledger.balances, from, to, amount);
}

void move_stable(TokenLedger& ledger, const Address& from, const Address& to, Quantity amount) {
    move_between(ledger.stable_balances, from, to, amount);
}

CreditSubmission submit_credit(WorldState& state, const Address& holder, std::string project_kind,
                               const Hash32& evidence_hash, Quantity tonnage) {
    if (registry::lookup(state, holder).role != Role::CreditHolder)
        fail(ErrorCode::RoleMismatch, "only credit holders submit credits");
    if (tonnage == 0) fail(ErrorCode::ZeroAmount);
    if (project_kind.size() > kMaxDisplayNameBytes) fail(ErrorCode::NameTooLong, "project kind");

    CreditSubmission sub;
    sub.id = state.counters.next_submission;
    sub.holder = holder;
    sub.project_kind = std::move(project_kind);
    sub.evidence_hash = evidence_hash;
    sub.tonnage = tonnage;
    sub.status = SubmissionStatus::Pending;

    // open_proposal is the last check (NoVerifiers) and the first write.
    Proposal p = quorum::open_proposal(state, ProposalKind::Mint, sub.id);
    sub.proposal_id = p.id;
    state.counters.next_submission += 1;
    state.submissions.emplace(sub.id, sub);
    return sub;
}

void detail::mint_effect(WorldState& state, RecordId submission_id) {
    auto it = state.submissions.find(submission_id);
    if (it == state.submissions.end()) fail(ErrorCode::UnknownSubmission, std::to_string(submission_id));
    auto& sub = it->second;
    if (sub.status != SubmissionStatus::Pending) fail(ErrorCode::AlreadyExecuted, "submission already minted");

    Quantity new_total = checked_add(state.token.total_minted, sub.tonnage);
    Quantity new_balance = checked_add(state.token.balance(sub.holder), sub.tonnage);

    state.token.total_minted = new_total;
    state.token.balances[sub.holder] = new_balance;
    sub.status = SubmissionStatus::Minted;
}

void execute_mint(WorldState& state, RecordId submission_id) {
    auto it = state.submissions.find(submission_id);
    if (it == state.submissions.end()) fail(ErrorCode::UnknownSubmission, std::to_string(submission_id));
    if (it->second.status != SubmissionStatus::Pending) fail(ErrorCode::AlreadyExecuted);
    if (!finalized(state, it->second.proposal_id)) fail(ErrorCode::NotFinalized);
    detail::mint_effect(state, submission_id);
}

void transfer(WorldState& state, const Address& from, const Address& to, Quantity amount) {
    if (amount == 0) fail(ErrorCode::ZeroAmount);
    if (to == kBurnSink) fail(ErrorCode::BurnSinkNotTransferable, "use burn");
    if (from == kBurnSink) fail(ErrorCode::BurnSinkNotTransferable, "the sink is never debited");
    if (!registry::is_registered(state, to)) fail(ErrorCode::UnknownAccount, to.hex());
    move_carbon(state.token, from, to, amount);
}

BurnRecord request_burn(WorldState& state, const Address& owner, Quantity amount) {
    if (amount == 0) fail(ErrorCode::ZeroAmount);
    if (owner == kBurnSink) fail(ErrorCode::BurnSinkNotTransferable);
    Quantity have = state.token.balance(owner);
    if (have < amount) fail(ErrorCode::InsufficientBalance, std::to_string(have) + " < " + std::to_string(amount));
    checked_add(state.token.balance(kBurnSink), amount);
    if (registry::accredited_verifiers(state).empty()) fail(ErrorCode::NoVerifiers);

    BurnRecord burn;
    burn.id = state.counters.next_burn;
    burn.owner = owner;
    burn.tonnage = amount;
    burn.status = BurnStatus::AwaitingVerification;

    Proposal p = quorum::open_proposal(state, ProposalKind::CertifyBurn, burn.id);
    burn.proposal_id = p.id;
    move_carbon(state.token, owner, kBurnSink, amount);
    state.counters.next_burn += 1;
    state.burns.emplace(burn.id, burn);
    return burn;
}

RetirementCertificate detail::certificate_effect(WorldState& state, RecordId burn_id, Height at) {
    auto it = state.burns.find(burn_id);
    if (it == state.burns.end()) fail(ErrorCode::UnknownBurn, std::to_string(burn_id));
    auto& burn = it->second;
    if (burn.status != BurnStatus::AwaitingVerification) fail(ErrorCode::AlreadyExecuted, "burn already certified");

    RetirementCertificate cert;
    cert.id = state.counters.next_certificate;
    cert.owner = burn.owner;
    cert.tonnage = burn.tonnage;
    cert.burn_id = burn.id;
    cert.issued_at = at;

    state.counters.next_certificate += 1;
    state.certificates.emplace(cert.id, cert);
    burn.status = BurnStatus::Certified;
    return cert;
}

RetirementCertificate issue_certificate(WorldState& state, RecordId burn_id, Height at) {
    auto it = state.burns.find(burn_id);
    if (it == state.burns.end()) fail(ErrorCode::UnknownBurn, std::to_string(burn_id));
    if (it->second.status != BurnStatus::AwaitingVerification) fail(ErrorCode::AlreadyExecuted);
    if (!finalized(state, it->second.proposal_id)) fail(ErrorCode::NotFinalized);
    return detail::certificate_effect(state, burn_id, at);
}

BalancesView query_balances(const WorldState& state) {
    BalancesView view;
    view.balances = state.token.balances;
    view.stable_balances = state.token.stable_balances;
    view.total_minted = state.token.total_minted;
    view.burned = state.token.balance(kBurnSink);
    view.stable_total = state.token.stable_total;
    view.certificates.reserve(state.certificates.size());
    for (const auto& [id, cert] : state.certificates) view.certificates.push_back(cert);
    return view;
}

}  // namespace carbon::token
