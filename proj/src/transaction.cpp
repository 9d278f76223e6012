#include "carbon/transaction.hpp"

#include "carbon/codec.hpp"
#include "carbon/errors.hpp"

namespace carbon {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

Value tagged(std::string_view kind) { return Value::map().set("kind", Value::text(std::string(kind))); }

void require_fields(const Value& v, std::size_t n) {
    if (v.as_map().size() != n) fail(ErrorCode::ParseError, "unexpected payload fields");
}

}  // namespace

std::string_view payload_kind(const Payload& p) {
    return std::visit(overloaded{
                          [](const payload::Register&) { return std::string_view{"register"}; },
                          [](const payload::Accredit&) { return std::string_view{"accredit"}; },
                          [](const payload::SubmitCredit&) { return std::string_view{"submit_credit"}; },
                          [](const payload::Approve&) { return std::string_view{"approve"}; },
                          [](const payload::Transfer&) { return std::string_view{"transfer"}; },
                          [](const payload::Burn&) { return std::string_view{"burn"}; },
                          [](const payload::CreatePool&) { return std::string_view{"pool_create"}; },
                          [](const payload::AddLiquidity&) { return std::string_view{"pool_add"}; },
                          [](const payload::RemoveLiquidity&) { return std::string_view{"pool_remove"}; },
                          [](const payload::Swap&) { return std::string_view{"swap"}; },
                      },
                      p);
}

Value encode(const Payload& p) {
    Value v = tagged(payload_kind(p));
    std::visit(overloaded{
                   [&](const payload::Register& r) {
                       v.set("role", Value::text(std::string(to_string(r.role))))
                           .set("public_key", Value::bytes(r.public_key))
                           .set("display_name", Value::text(r.display_name));
                   },
                   [&](const payload::Accredit& a) {
                       v.set("target", codec::encode(a.target)).set("accredited", Value::boolean(a.accredited));
                   },
                   [&](const payload::SubmitCredit& s) {
                       v.set("project_kind", Value::text(s.project_kind))
                           .set("evidence_hash", codec::encode(s.evidence_hash))
                           .set("tonnage", Value::uint(s.tonnage));
                   },
                   [&](const payload::Approve& a) { v.set("proposal_id", Value::uint(a.proposal_id)); },
                   [&](const payload::Transfer& t) {
                       v.set("to", codec::encode(t.to)).set("amount", Value::uint(t.amount));
                   },
                   [&](const payload::Burn& b) { v.set("amount", Value::uint(b.amount)); },
                   [&](const payload::CreatePool& c) {
                       v.set("carbon_amount", Value::uint(c.carbon_amount))
                           .set("stable_amount", Value::uint(c.stable_amount));
                   },
                   [&](const payload::AddLiquidity& a) {
                       v.set("carbon_in", Value::uint(a.carbon_in)).set("stable_in", Value::uint(a.stable_in));
                   },
                   [&](const payload::RemoveLiquidity& r) { v.set("shares", Value::uint(r.shares)); },
                   [&](const payload::Swap& s) {
                       v.set("direction", Value::text(std::string(amm::to_string(s.direction))))
                           .set("amount_in", Value::uint(s.amount_in))
                           .set("min_out", Value::uint(s.min_out));
                   },
               },
               p);
    return v;
}

Payload decode_payload(const Value& v) {
    const auto& kind = v.at("kind").as_text();
    if (kind == "register") {
        require_fields(v, 4);
        auto role = role_from_string(v.at("role").as_text());
        if (!role) fail(ErrorCode::ParseError, "unknown role");
        return payload::Register{*role, v.at("public_key").as_bytes(), v.at("display_name").as_text()};
    }
    if (kind == "accredit") {
        require_fields(v, 3);
        return payload::Accredit{codec::decode_address(v.at("target")), v.at("accredited").as_bool()};
    }
    if (kind == "submit_credit") {
        require_fields(v, 4);
        return payload::SubmitCredit{v.at("project_kind").as_text(), codec::decode_hash(v.at("evidence_hash")),
                                     v.at("tonnage").as_uint()};
    }
    if (kind == "approve") {
        require_fields(v, 2);
        return payload::Approve{v.at("proposal_id").as_uint()};
    }
    if (kind == "transfer") {
        require_fields(v, 3);
        return payload::Transfer{codec::decode_address(v.at("to")), v.at("amount").as_uint()};
    }
    if (kind == "burn") {
        require_fields(v, 2);
        return payload::Burn{v.at("amount").as_uint()};
    }
    if (kind == "pool_create") {
        require_fields(v, 3);
        return payload::CreatePool{v.at("carbon_amount").as_uint(), v.at("stable_amount").as_uint()};
    }
    if (kind == "pool_add") {
        require_fields(v, 3);
        return payload::AddLiquidity{v.at("carbon_in").as_uint(), v.at("stable_in").as_uint()};
    }
    if (kind == "pool_remove") {
        require_fields(v, 2);
        return payload::RemoveLiquidity{v.at("shares").as_uint()};
    }
    if (kind == "swap") {
        require_fields(v, 4);
        auto dir = amm::direction_from_string(v.at("direction").as_text());
        if (!dir) fail(ErrorCode::ParseError, "unknown swap direction");
        return payload::Swap{*dir, v.at("amount_in").as_uint(), v.at("min_out").as_uint()};
    }
    fail(ErrorCode::ParseError, "unknown payload kind '" + kind + "'");
}

Value encode(const SignedTransaction& tx) {
    return Value::map()
        .set("sender", codec::encode(tx.sender))
        .set("nonce", Value::uint(tx.nonce))
        .set("payload", encode(tx.payload))
        .set("signature", Value::bytes(tx.signature));
}

SignedTransaction decode_transaction(const Value& v) {
    if (v.as_map().size() != 4) fail(ErrorCode::ParseError, "unexpected transaction fields");
    SignedTransaction tx;
    tx.sender = codec::decode_address(v.at("sender"));
    tx.nonce = v.at("nonce").as_uint();
    tx.payload = decode_payload(v.at("payload"));
    tx.signature = v.at("signature").as_bytes();
    return tx;
}

Hash32 signing_digest(const Address& sender, std::uint64_t nonce, const Payload& p) {
    Value body = Value::map()
                     .set("sender", codec::encode(sender))
                     .set("nonce", Value::uint(nonce))
                     .set("payload", encode(p));
    return sha256(canonical_serialize(body));
}

Hash32 tx_hash(const SignedTransaction& tx) { return sha256(canonical_serialize(encode(tx))); }

SignedTransaction sign_transaction(const SignatureScheme& scheme, const KeyPair& keys, std::uint64_t nonce,
                                   Payload p) {
    SignedTransaction tx;
    tx.sender = derive_address(keys.public_key);
    tx.nonce = nonce;
    tx.payload = std::move(p);
    tx.signature = scheme.sign(keys.secret_key, signing_digest(tx.sender, tx.nonce, tx.payload));
    return tx;
}

}  // namespace carbon
