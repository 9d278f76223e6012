#include "carbon/codec.hpp"

#include <stdexcept>

#include "carbon/errors.hpp"

namespace carbon::codec {

namespace {

using carbon::codec::encode;

template <typename Enum, typename... E>
Enum enum_from_text(const Value& v, E... candidates) {
    const auto& s = v.as_text();
    for (Enum e : {candidates...})
        if (to_string(e) == s) return e;
    fail(ErrorCode::ParseError, "unknown enum value '" + s + "'");
}

Value encode_quantity_map(const std::map<Address, Quantity>& m) {
    Value::Map out;
    for (const auto& [addr, q] : m) out.emplace(addr.hex(), Value::uint(q));
    return Value::map(std::move(out));
}

std::map<Address, Quantity> decode_quantity_map(const Value& v) {
    std::map<Address, Quantity> out;
    for (const auto& [k, q] : v.as_map()) {
        try {
            out.emplace(Address::from_hex(k), q.as_uint());
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::ParseError, "bad address key '" + k + "'");
        }
    }
    return out;
}

Value encode_address_set(const std::set<Address>& s) {
    Value::List l;
    for (const auto& a : s) l.push_back(encode(a));
    return Value::list(std::move(l));
}

std::set<Address> decode_address_set(const Value& v) {
    std::set<Address> out;
    for (const auto& a : v.as_list()) out.insert(decode_address(a));
    return out;
}

Value encode(const CreditSubmission& s) {
    return Value::map()
        .set("id", Value::uint(s.id))
        .set("holder", encode(s.holder))
        .set("project_kind", Value::text(s.project_kind))
        .set("evidence_hash", encode(s.evidence_hash))
        .set("tonnage", Value::uint(s.tonnage))
        .set("status", Value::text(std::string(to_string(s.status))))
        .set("proposal_id", Value::uint(s.proposal_id));
}

CreditSubmission decode_submission(const Value& v) {
    CreditSubmission s;
    s.id = v.at("id").as_uint();
    s.holder = decode_address(v.at("holder"));
    s.project_kind = v.at("project_kind").as_text();
    s.evidence_hash = decode_hash(v.at("evidence_hash"));
    s.tonnage = v.at("tonnage").as_uint();
    s.status = enum_from_text<SubmissionStatus>(v.at("status"), SubmissionStatus::Pending,
                                                SubmissionStatus::Minted, SubmissionStatus::Rejected);
    s.proposal_id = v.at("proposal_id").as_uint();
    return s;
}

Value encode(const BurnRecord& b) {
    return Value::map()
        .set("id", Value::uint(b.id))
        .set("owner", encode(b.owner))
        .set("tonnage", Value::uint(b.tonnage))
        .set("status", Value::text(std::string(to_string(b.status))))
        .set("proposal_id", Value::uint(b.proposal_id));
}

BurnRecord decode_burn(const Value& v) {
    BurnRecord b;
    b.id = v.at("id").as_uint();
    b.owner = decode_address(v.at("owner"));
    b.tonnage = v.at("tonnage").as_uint();
    b.status = enum_from_text<BurnStatus>(v.at("status"), BurnStatus::AwaitingVerification, BurnStatus::Certified);
    b.proposal_id = v.at("proposal_id").as_uint();
    return b;
}

Value encode(const RetirementCertificate& c) {
    return Value::map()
        .set("id", Value::uint(c.id))
        .set("owner", encode(c.owner))
        .set("tonnage", Value::uint(c.tonnage))
        .set("burn_id", Value::uint(c.burn_id))
        .set("issued_at", Value::uint(c.issued_at));
}

RetirementCertificate decode_certificate(const Value& v) {
    RetirementCertificate c;
    c.id = v.at("id").as_uint();
    c.owner = decode_address(v.at("owner"));
    c.tonnage = v.at("tonnage").as_uint();
    c.burn_id = v.at("burn_id").as_uint();
    c.issued_at = v.at("issued_at").as_uint();
    return c;
}

Value encode(const Proposal& p) {
    return Value::map()
        .set("id", Value::uint(p.id))
        .set("kind", Value::text(std::string(to_string(p.kind))))
        .set("subject_id", Value::uint(p.subject_id))
        .set("eligible_verifiers", encode_address_set(p.eligible_verifiers))
        .set("approvals", encode_address_set(p.approvals))
        .set("status", Value::text(std::string(to_string(p.status))));
}

Proposal decode_proposal(const Value& v) {
    Proposal p;
    p.id = v.at("id").as_uint();
    p.kind = enum_from_text<ProposalKind>(v.at("kind"), ProposalKind::Mint, ProposalKind::CertifyBurn);
    p.subject_id = v.at("subject_id").as_uint();
    p.eligible_verifiers = decode_address_set(v.at("eligible_verifiers"));
    p.approvals = decode_address_set(v.at("approvals"));
    p.status = enum_from_text<ProposalStatus>(v.at("status"), ProposalStatus::Open, ProposalStatus::Executed);
    return p;
}

template <typename Record>
Value encode_records(const std::map<RecordId, Record>& m) {
    Value::List l;
    l.reserve(m.size());
    for (const auto& [id, r] : m) l.push_back(encode(r));
    return Value::list(std::move(l));
}

template <typename Record, typename Decode>
std::map<RecordId, Record> decode_records(const Value& v, Decode decode) {
    std::map<RecordId, Record> out;
    for (const auto& item : v.as_list()) {
        Record r = decode(item);
        RecordId id = r.id;
        if (!out.emplace(id, std::move(r)).second) fail(ErrorCode::ParseError, "duplicate record id");
    }
    return out;
}

}  // namespace

Value encode(const Address& a) { return Value::bytes(a.view()); }
Value encode(const Hash32& h) { return Value::bytes(h.view()); }

Address decode_address(const Value& v) {
    const auto& b = v.as_bytes();
    if (b.size() != 32) fail(ErrorCode::ParseError, "address must be 32 bytes");
    return Address::from_bytes(b);
}

Hash32 decode_hash(const Value& v) {
    const auto& b = v.as_bytes();
    if (b.size() != 32) fail(ErrorCode::ParseError, "hash must be 32 bytes");
    return Hash32::from_bytes(b);
}

Value encode(const AccountRecord& r) {
    return Value::map()
        .set("id", encode(r.id))
        .set("role", Value::text(std::string(to_string(r.role))))
        .set("public_key", Value::bytes(r.public_key))
        .set("display_name", Value::text(r.display_name))
        .set("accredited", Value::boolean(r.accredited))
        .set("registered_at", Value::uint(r.registered_at));
}

AccountRecord decode_account(const Value& v) {
    AccountRecord r;
    r.id = decode_address(v.at("id"));
    auto role = role_from_string(v.at("role").as_text());
    if (!role) fail(ErrorCode::ParseError, "unknown role");
    r.role = *role;
    r.public_key = v.at("public_key").as_bytes();
    r.display_name = v.at("display_name").as_text();
    r.accredited = v.at("accredited").as_bool();
    r.registered_at = v.at("registered_at").as_uint();
    return r;
}

Value encode(const WorldState& s) {
    Value::Map accounts;
    for (const auto& [addr, rec] : s.accounts) accounts.emplace(addr.hex(), encode(rec));

    Value::List pool;
    if (s.pool) {
        pool.push_back(Value::map()
                           .set("carbon_reserve", Value::uint(s.pool->carbon_reserve))
                           .set("stable_reserve", Value::uint(s.pool->stable_reserve))
                           .set("fee_numerator", Value::uint(s.pool->fee_numerator))
                           .set("fee_denominator", Value::uint(s.pool->fee_denominator)));
    }

    Value out = Value::map();
    out.set("chain_id", Value::text(s.chain_id))
        .set("quorum", Value::map()
                           .set("threshold_numerator", Value::uint(s.quorum.threshold_numerator))
                           .set("threshold_denominator", Value::uint(s.quorum.threshold_denominator)))
        .set("registry", Value::map().set("admin", encode(s.admin)).set("accounts", Value::map(std::move(accounts))))
        .set("nonces", encode_quantity_map(s.nonces))
        .set("token", Value::map()
                          .set("balances", encode_quantity_map(s.token.balances))
                          .set("total_minted", Value::uint(s.token.total_minted))
                          .set("stable_balances", encode_quantity_map(s.token.stable_balances))
                          .set("stable_total", Value::uint(s.token.stable_total)))
        .set("submissions", encode_records(s.submissions))
        .set("burns", encode_records(s.burns))
        .set("certificates", encode_records(s.certificates))
        .set("proposals", encode_records(s.proposals))
        .set("pool", Value::list(std::move(pool)))
        .set("lp_shares", Value::map()
                              .set("shares", encode_quantity_map(s.lp_shares.shares))
                              .set("total_shares", Value::uint(s.lp_shares.total_shares)))
        .set("counters", Value::map()
                             .set("next_submission", Value::uint(s.counters.next_submission))
                             .set("next_burn", Value::uint(s.counters.next_burn))
                             .set("next_proposal", Value::uint(s.counters.next_proposal))
                             .set("next_certificate", Value::uint(s.counters.next_certificate)));
    return out;
}

WorldState decode_state(const Value& v) {
    WorldState s;
    s.chain_id = v.at("chain_id").as_text();
    const auto& q = v.at("quorum");
    s.quorum.threshold_numerator = q.at("threshold_numerator").as_uint();
    s.quorum.threshold_denominator = q.at("threshold_denominator").as_uint();

    const auto& reg = v.at("registry");
    s.admin = decode_address(reg.at("admin"));
    for (const auto& [k, rec] : reg.at("accounts").as_map()) {
        auto r = decode_account(rec);
        if (r.id.hex() != k) fail(ErrorCode::ParseError, "account key does not match record id");
        s.accounts.emplace(r.id, std::move(r));
    }
    s.nonces = decode_quantity_map(v.at("nonces"));

    const auto& tok = v.at("token");
    s.token.balances = decode_quantity_map(tok.at("balances"));
    s.token.total_minted = tok.at("total_minted").as_uint();
    s.token.stable_balances = decode_quantity_map(tok.at("stable_balances"));
    s.token.stable_total = tok.at("stable_total").as_uint();

    s.submissions = decode_records<CreditSubmission>(v.at("submissions"), decode_submission);
    s.burns = decode_records<BurnRecord>(v.at("burns"), decode_burn);
    s.certificates = decode_records<RetirementCertificate>(v.at("certificates"), decode_certificate);
    s.proposals = decode_records<Proposal>(v.at("proposals"), decode_proposal);

    const auto& pool = v.at("pool").as_list();
    if (pool.size() > 1) fail(ErrorCode::ParseError, "at most one pool");
    if (pool.size() == 1) {
        LiquidityPool p;
        p.carbon_reserve = pool[0].at("carbon_reserve").as_uint();
        p.stable_reserve = pool[0].at("stable_reserve").as_uint();
        p.fee_numerator = pool[0].at("fee_numerator").as_uint();
        p.fee_denominator = pool[0].at("fee_denominator").as_uint();
        s.pool = p;
    }

    const auto& lp = v.at("lp_shares");
    s.lp_shares.shares = decode_quantity_map(lp.at("shares"));
    s.lp_shares.total_shares = lp.at("total_shares").as_uint();

    const auto& c = v.at("counters");
    s.counters.next_submission = c.at("next_submission").as_uint();
    s.counters.next_burn = c.at("next_burn").as_uint();
    s.counters.next_proposal = c.at("next_proposal").as_uint();
    s.counters.next_certificate = c.at("next_certificate").as_uint();

    // Reject extra or non-canonical content so decode is exact.
    if (!(encode(s) == v)) fail(ErrorCode::ParseError, "state document does not match its schema");
    return s;
}

}  // namespace carbon::codec
