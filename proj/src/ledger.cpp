#include "carbon/ledger.hpp"

#include "carbon/codec.hpp"
#include "carbon/quorum.hpp"
#include "carbon/registry.hpp"
#include "carbon/token.hpp"

namespace carbon {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

/// Resolves the key the signature must verify against. A registration is
/// self-signed by the key it registers.
ByteView signer_key(const WorldState& state, const SignedTransaction& tx) {
    if (const auto* reg = std::get_if<payload::Register>(&tx.payload)) {
        if (derive_address(reg->public_key) != tx.sender)
            fail(ErrorCode::BadSignature, "sender is not the registered key's address");
        return reg->public_key;
    }
    auto it = state.accounts.find(tx.sender);
    if (it == state.accounts.end()) fail(ErrorCode::UnknownSender, tx.sender.hex());
    return it->second.public_key;
}

void dispatch(WorldState& state, const SignedTransaction& tx, const ApplyContext& ctx, Receipt& receipt) {
    const Address& sender = tx.sender;
    std::visit(
        overloaded{
            [&](const payload::Register& p) {
                registry::register_account(state, p.role, p.public_key, p.display_name, ctx.height);
            },
            [&](const payload::Accredit& p) {
                registry::set_verifier_accreditation(state, sender, p.target, p.accredited);
            },
            [&](const payload::SubmitCredit& p) {
                auto sub = token::submit_credit(state, sender, p.project_kind, p.evidence_hash, p.tonnage);
                receipt.emitted_ids = {sub.id, sub.proposal_id};
                receipt.outputs["submission_id"] = sub.id;
                receipt.outputs["proposal_id"] = sub.proposal_id;
            },
            [&](const payload::Approve& p) {
                auto outcome = quorum::cast_approval(state, sender, p.proposal_id, ctx.height);
                receipt.outputs["approvals"] = outcome.tally.count;
                receipt.outputs["needed"] = outcome.tally.needed;
                receipt.outputs["executed"] = outcome.tally.status == ProposalStatus::Executed ? 1 : 0;
                if (outcome.certificate_id) {
                    receipt.emitted_ids.push_back(*outcome.certificate_id);
                    receipt.outputs["certificate_id"] = *outcome.certificate_id;
                }
            },
            [&](const payload::Transfer& p) { token::transfer(state, sender, p.to, p.amount); },
            [&](const payload::Burn& p) {
                auto burn = token::request_burn(state, sender, p.amount);
                receipt.emitted_ids = {burn.id, burn.proposal_id};
                receipt.outputs["burn_id"] = burn.id;
                receipt.outputs["proposal_id"] = burn.proposal_id;
            },
            [&](const payload::CreatePool& p) {
                receipt.outputs["shares"] = amm::create_pool(state, sender, p.carbon_amount, p.stable_amount);
            },
            [&](const payload::AddLiquidity& p) {
                receipt.outputs["shares"] = amm::add_liquidity(state, sender, p.carbon_in, p.stable_in);
            },
            [&](const payload::RemoveLiquidity& p) {
                auto [c, s] = amm::remove_liquidity(state, sender, p.shares);
                receipt.outputs["carbon_out"] = c;
                receipt.outputs["stable_out"] = s;
            },
            [&](const payload::Swap& p) {
                receipt.outputs["amount_out"] =
                    amm::swap_exact_in(state, sender, p.direction, p.amount_in, p.min_out);
            },
        },
        tx.payload);
}

}  // namespace

Hash32 state_root(const WorldState& state) { return sha256(canonical_serialize(codec::encode(state))); }

Value encode(const Receipt& r) {
    Value::List ids;
    for (auto id : r.emitted_ids) ids.push_back(Value::uint(id));
    Value::Map outputs;
    for (const auto& [k, v] : r.outputs) outputs.emplace(k, Value::uint(v));
    return Value::map()
        .set("tx_hash", codec::encode(r.tx_hash))
        .set("status", Value::text(r.accepted() ? "accepted" : "rejected"))
        .set("reason", Value::text(r.accepted() ? "" : std::string(to_string(*r.rejection))))
        .set("emitted_ids", Value::list(std::move(ids)))
        .set("outputs", Value::map(std::move(outputs)));
}

Receipt apply_in_place(WorldState& state, const SignedTransaction& tx, const ApplyContext& ctx) {
    Receipt receipt;
    receipt.tx_hash = tx_hash(tx);
    try {
        if (ctx.scheme == nullptr) throw std::logic_error("ApplyContext without a signature scheme");
        ByteView key = signer_key(state, tx);
        if (!ctx.scheme->verify(key, signing_digest(tx.sender, tx.nonce, tx.payload), tx.signature))
            fail(ErrorCode::BadSignature);
        const std::uint64_t expected = state.nonce_of(tx.sender);
        if (tx.nonce != expected)
            fail(ErrorCode::BadNonce, "expected " + std::to_string(expected) + ", got " + std::to_string(tx.nonce));

        dispatch(state, tx, ctx, receipt);
        state.nonces[tx.sender] = expected + 1;
    } catch (const LedgerError& e) {
        receipt.rejection = e.code();
        receipt.emitted_ids.clear();
        receipt.outputs.clear();
    }
    return receipt;
}

std::pair<WorldState, Receipt> apply_transaction(const WorldState& state, const SignedTransaction& tx,
                                                 const ApplyContext& ctx) {
    WorldState next = state;
    Receipt r = apply_in_place(next, tx, ctx);
    return {std::move(next), std::move(r)};
}

WorldState replay(const WorldState& genesis, std::span<const LogEntry> log, const SignatureScheme& scheme) {
    WorldState state = genesis;
    for (const auto& entry : log) apply_in_place(state, entry.tx, ApplyContext{entry.height, &scheme});
    return state;
}

Hash32 header_hash(const BlockHeader& h) {
    Value v = Value::map()
                  .set("height", Value::uint(h.height))
                  .set("parent_hash", codec::encode(h.parent_hash))
                  .set("timestamp", Value::uint(h.timestamp))
                  .set("tx_list_hash", codec::encode(h.tx_list_hash))
                  .set("state_root", codec::encode(h.state_root));
    return sha256(canonical_serialize(v));
}

Hash32 tx_list_hash(std::span<const SignedTransaction> txs) {
    Value::List l;
    l.reserve(txs.size());
    for (const auto& tx : txs) l.push_back(encode(tx));
    return sha256(canonical_serialize(Value::list(std::move(l))));
}

Value encode(const Block& b) {
    Value::List txs;
    txs.reserve(b.transactions.size());
    for (const auto& tx : b.transactions) txs.push_back(encode(tx));
    return Value::map()
        .set("height", Value::uint(b.header.height))
        .set("parent_hash", codec::encode(b.header.parent_hash))
        .set("timestamp", Value::uint(b.header.timestamp))
        .set("tx_list_hash", codec::encode(b.header.tx_list_hash))
        .set("state_root", codec::encode(b.header.state_root))
        .set("hash", codec::encode(b.hash))
        .set("transactions", Value::list(std::move(txs)));
}

Block decode_block(const Value& v) {
    if (v.as_map().size() != 7) fail(ErrorCode::ParseError, "unexpected block fields");
    Block b;
    b.header.height = v.at("height").as_uint();
    b.header.parent_hash = codec::decode_hash(v.at("parent_hash"));
    b.header.timestamp = v.at("timestamp").as_uint();
    b.header.tx_list_hash = codec::decode_hash(v.at("tx_list_hash"));
    b.header.state_root = codec::decode_hash(v.at("state_root"));
    b.hash = codec::decode_hash(v.at("hash"));
    for (const auto& tx : v.at("transactions").as_list()) b.transactions.push_back(decode_transaction(tx));
    return b;
}

Block genesis_block(const WorldState& genesis) {
    Block b;
    b.header.height = 0;
    b.header.parent_hash = Hash32{};
    b.header.timestamp = 0;
    b.header.tx_list_hash = tx_list_hash({});
    b.header.state_root = state_root(genesis);
    b.hash = header_hash(b.header);
    return b;
}

Block seal_block(const Block& parent, std::vector<SignedTransaction> txs, const Hash32& post_state_root,
                 std::uint64_t timestamp) {
    if (timestamp < parent.header.timestamp)
        fail(ErrorCode::TimestampRegression,
             std::to_string(timestamp) + " < " + std::to_string(parent.header.timestamp));
    Block b;
    b.header.height = parent.header.height + 1;
    b.header.parent_hash = header_hash(parent.header);
    b.header.timestamp = timestamp;
    b.header.tx_list_hash = tx_list_hash(txs);
    b.header.state_root = post_state_root;
    b.hash = header_hash(b.header);
    b.transactions = std::move(txs);
    return b;
}

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::HeaderHash: return "header-hash";
        case ViolationKind::ParentHash: return "parent-hash";
        case ViolationKind::HeightMismatch: return "height";
        case ViolationKind::TimestampRegression: return "timestamp-regression";
        case ViolationKind::TxListHash: return "tx-list-hash";
        case ViolationKind::RejectedTransaction: return "rejected-transaction";
        case ViolationKind::StateRoot: return "state-root";
    }
    return "?";
}

std::optional<ChainViolation> verify_chain(const WorldState& genesis, std::span<const Block> blocks,
                                           const SignatureScheme& scheme) {
    WorldState state = genesis;
    BlockHeader parent = genesis_block(genesis).header;
    for (const auto& block : blocks) {
        const Height expected = parent.height + 1;
        auto violation = [&](ViolationKind kind, std::string detail) {
            return std::optional<ChainViolation>{ChainViolation{expected, kind, std::move(detail)}};
        };
        const auto& h = block.header;
        if (header_hash(h) != block.hash) return violation(ViolationKind::HeaderHash, "stored hash does not match");
        if (h.parent_hash != header_hash(parent)) return violation(ViolationKind::ParentHash, "parent link broken");
        if (h.height != expected) return violation(ViolationKind::HeightMismatch, "got " + std::to_string(h.height));
        if (h.timestamp < parent.timestamp) return violation(ViolationKind::TimestampRegression, "");
        if (tx_list_hash(block.transactions) != h.tx_list_hash)
            return violation(ViolationKind::TxListHash, "transactions do not match header");
        for (std::size_t i = 0; i < block.transactions.size(); ++i) {
            auto r = apply_in_place(state, block.transactions[i], ApplyContext{expected, &scheme});
            if (!r.accepted())
                return violation(ViolationKind::RejectedTransaction,
                                 "tx " + std::to_string(i) + ": " + std::string(to_string(*r.rejection)));
        }
        if (state_root(state) != h.state_root) return violation(ViolationKind::StateRoot, "replayed root differs");
        parent = h;
    }
    return std::nullopt;
}

Ledger::Ledger(WorldState genesis, const SignatureScheme& scheme)
    : genesis_(std::move(genesis)), state_(genesis_), scheme_(&scheme), genesis_block_(carbon::genesis_block(genesis_)) {}

Receipt Ledger::submit(const SignedTransaction& tx) {
    const Height h = pending_height();
    Receipt r = apply_in_place(state_, tx, ApplyContext{h, scheme_});
    if (r.accepted()) {
        pending_.push_back(tx);
        log_.push_back(LogEntry{h, tx});
    }
    return r;
}

const Block& Ledger::seal(std::uint64_t timestamp) {
    Block b = seal_block(tip(), pending_, state_root(state_), timestamp);
    blocks_.push_back(std::move(b));
    pending_.clear();
    return blocks_.back();
}

Ledger Ledger::restore(WorldState genesis, const SignatureScheme& scheme, std::vector<Block> blocks,
                       std::span<const LogEntry> log) {
    Ledger ledger(std::move(genesis), scheme);
    std::size_t next = 0;
    for (auto& block : blocks) {
        const Height h = ledger.pending_height();
        if (block.header.height != h || block.header.parent_hash != header_hash(ledger.tip().header) ||
            block.hash != header_hash(block.header) || block.header.tx_list_hash != tx_list_hash(block.transactions))
            fail(ErrorCode::RootMismatch, "block " + std::to_string(h) + " does not extend the chain");
        for (const auto& tx : block.transactions) {
            if (next >= log.size() || log[next].tx != tx || log[next].height != h)
                fail(ErrorCode::RootMismatch, "log disagrees with block " + std::to_string(h));
            if (!ledger.submit(tx).accepted())
                fail(ErrorCode::RootMismatch, "block " + std::to_string(h) + " holds a rejected transaction");
            ++next;
        }
        if (state_root(ledger.state_) != block.header.state_root)
            fail(ErrorCode::RootMismatch, "state root differs at block " + std::to_string(h));
        ledger.blocks_.push_back(std::move(block));
        ledger.pending_.clear();
    }
    for (; next < log.size(); ++next) {
        if (log[next].height != ledger.pending_height())
            fail(ErrorCode::RootMismatch, "unsealed log entry at unexpected height");
        if (!ledger.submit(log[next].tx).accepted())
            fail(ErrorCode::RootMismatch, "log holds a rejected transaction");
    }
    return ledger;
}

}  // namespace carbon
