#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "carbon/errors.hpp"
#include "carbon/state.hpp"
#include "carbon/transaction.hpp"

namespace carbon {

/// SHA-256 of the canonical serialization of the whole state.
Hash32 state_root(const WorldState& state);

struct Receipt {
    Hash32 tx_hash;
    std::optional<ErrorCode> rejection;
    /// Record ids created by the transaction, in creation order.
    std::vector<RecordId> emitted_ids;
    /// Named integer results for display (amount_out, shares, ...).
    std::map<std::string, std::uint64_t> outputs;

    [[nodiscard]] bool accepted() const { return !rejection.has_value(); }
};

Value encode(const Receipt& r);

struct ApplyContext {
    /// Height of the block the transaction will land in.
    Height height = 1;
    const SignatureScheme* scheme = nullptr;
};

/// Applies `tx` in place. On rejection the state is left exactly as it was
/// and the sender's nonce is not consumed.
Receipt apply_in_place(WorldState& state, const SignedTransaction& tx, const ApplyContext& ctx);

/// Value form of apply_in_place.
std::pair<WorldState, Receipt> apply_transaction(const WorldState& state, const SignedTransaction& tx,
                                                 const ApplyContext& ctx);

/// An accepted transaction together with the height it was applied at.
struct LogEntry {
    Height height = 1;
    SignedTransaction tx;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// Folds apply_in_place over the log; rejected entries contribute nothing.
WorldState replay(const WorldState& genesis, std::span<const LogEntry> log, const SignatureScheme& scheme);

struct BlockHeader {
    Height height = 0;
    Hash32 parent_hash;
    std::uint64_t timestamp = 0;
    Hash32 tx_list_hash;
    Hash32 state_root;

    friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

struct Block {
    BlockHeader header;
    /// Stored header hash as sealed; verify_chain recomputes and compares.
    Hash32 hash;
    std::vector<SignedTransaction> transactions;

    friend bool operator==(const Block&, const Block&) = default;
};

Hash32 header_hash(const BlockHeader& h);
Hash32 tx_list_hash(std::span<const SignedTransaction> txs);

Value encode(const Block& b);
Block decode_block(const Value& v);

/// Height-0 block for a genesis state: zero parent, timestamp 0, empty list.
Block genesis_block(const WorldState& genesis);

/// Throws LedgerError(TimestampRegression) if timestamp < parent's.
Block seal_block(const Block& parent, std::vector<SignedTransaction> txs, const Hash32& post_state_root,
                 std::uint64_t timestamp);

enum class ViolationKind : std::uint8_t {
    HeaderHash,
    ParentHash,
    HeightMismatch,
    TimestampRegression,
    TxListHash,
    RejectedTransaction,
    StateRoot,
};

std::string_view to_string(ViolationKind k);

struct ChainViolation {
    Height height = 0;
    ViolationKind kind = ViolationKind::ParentHash;
    std::string detail;
};

/// Replays `blocks` (heights 1..n) from the genesis state and reports the
/// first inconsistency, or nullopt when the chain is sound.
std::optional<ChainViolation> verify_chain(const WorldState& genesis, std::span<const Block> blocks,
                                           const SignatureScheme& scheme);

/// Single-writer session over a chain: applies transactions, keeps the
/// accepted ones pending until the next seal.
class Ledger {
public:
    Ledger(WorldState genesis, const SignatureScheme& scheme);

    /// Applies and, if accepted, records `tx` for the next block.
    Receipt submit(const SignedTransaction& tx);

    /// Seals everything pending into a new block.
    const Block& seal(std::uint64_t timestamp);

    /// Restores a session from durable artifacts: sealed blocks followed by
    /// log entries not yet sealed. Throws LedgerError on any inconsistency.
    static Ledger restore(WorldState genesis, const SignatureScheme& scheme, std::vector<Block> blocks,
                          std::span<const LogEntry> log);

    [[nodiscard]] const WorldState& state() const { return state_; }
    [[nodiscard]] const WorldState& genesis() const { return genesis_; }
    [[nodiscard]] const Block& tip() const { return blocks_.empty() ? genesis_block_ : blocks_.back(); }
    [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
    [[nodiscard]] const std::vector<LogEntry>& log() const { return log_; }
    [[nodiscard]] const std::vector<SignedTransaction>& pending() const { return pending_; }
    [[nodiscard]] Height pending_height() const { return tip().header.height + 1; }
    [[nodiscard]] const SignatureScheme& scheme() const { return *scheme_; }

private:
    WorldState genesis_;
    WorldState state_;
    const SignatureScheme* scheme_;
    Block genesis_block_;
    std::vector<Block> blocks_;
    std::vector<LogEntry> log_;
    std::vector<SignedTransaction> pending_;
};

}  // namespace carbon
