#pragma once

#include <string>
#include <variant>

#include "carbon/amm.hpp"
#include "carbon/canonical.hpp"
#include "carbon/crypto.hpp"
#include "carbon/state.hpp"

namespace carbon {

/// Commands a signed transaction can carry, one per module operation that
/// users may invoke directly. Mint and certificate issuance have no payload;
/// they run from the approval that completes a quorum.
namespace payload {

struct Register {
    Role role = Role::Customer;
    Bytes public_key;
    std::string display_name;
    friend bool operator==(const Register&, const Register&) = default;
};

struct Accredit {
    Address target;
    bool accredited = true;
    friend bool operator==(const Accredit&, const Accredit&) = default;
};

struct SubmitCredit {
    std::string project_kind;
    Hash32 evidence_hash;
    Quantity tonnage = 0;
    friend bool operator==(const SubmitCredit&, const SubmitCredit&) = default;
};

struct Approve {
    RecordId proposal_id = 0;
    friend bool operator==(const Approve&, const Approve&) = default;
};

struct Transfer {
    Address to;
    Quantity amount = 0;
    friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct Burn {
    Quantity amount = 0;
    friend bool operator==(const Burn&, const Burn&) = default;
};

struct CreatePool {
    Quantity carbon_amount = 0;
    Quantity stable_amount = 0;
    friend bool operator==(const CreatePool&, const CreatePool&) = default;
};

struct AddLiquidity {
    Quantity carbon_in = 0;
    Quantity stable_in = 0;
    friend bool operator==(const AddLiquidity&, const AddLiquidity&) = default;
};

struct RemoveLiquidity {
    Quantity shares = 0;
    friend bool operator==(const RemoveLiquidity&, const RemoveLiquidity&) = default;
};

struct Swap {
    amm::Direction direction = amm::Direction::StableIn;
    Quantity amount_in = 0;
    Quantity min_out = 0;
    friend bool operator==(const Swap&, const Swap&) = default;
};

}  // namespace payload

using Payload = std::variant<payload::Register, payload::Accredit, payload::SubmitCredit, payload::Approve,
                             payload::Transfer, payload::Burn, payload::CreatePool, payload::AddLiquidity,
                             payload::RemoveLiquidity, payload::Swap>;

/// Canonical "kind" tag of a payload.
std::string_view payload_kind(const Payload& p);

struct SignedTransaction {
    Address sender;
    std::uint64_t nonce = 0;
    Payload payload;
    Bytes signature;

    friend bool operator==(const SignedTransaction&, const SignedTransaction&) = default;
};

Value encode(const Payload& p);
Payload decode_payload(const Value& v);
Value encode(const SignedTransaction& tx);
SignedTransaction decode_transaction(const Value& v);

/// SHA-256 of canonical {"nonce","payload","sender"}; this is what gets signed.
Hash32 signing_digest(const Address& sender, std::uint64_t nonce, const Payload& p);

/// SHA-256 of the full canonical transaction including the signature.
Hash32 tx_hash(const SignedTransaction& tx);

/// Builds and signs a transaction from the holder of `keys`.
SignedTransaction sign_transaction(const SignatureScheme& scheme, const KeyPair& keys, std::uint64_t nonce,
                                   Payload p);

}  // namespace carbon
