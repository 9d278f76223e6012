#pragma once

// Durable artifacts, all line-oriented canonical text:
//
//   *.genesis  one canonical GenesisConfig document
//   *.txlog    one {"hash","height","tx"} record per accepted transaction
//   *.blocks   one canonical block per line, height order
//   *.snap     {"chain_id","height","state","state_root"}
//
// The log is the source of truth; snapshots are a shortcut and blocks record
// the sealing history.

#include <filesystem>
#include <string>
#include <vector>

#include "carbon/canonical.hpp"
#include "carbon/ledger.hpp"
#include "carbon/state.hpp"

namespace carbon::storage {

struct InitialVerifier {
    Bytes public_key;
    std::string display_name;
    friend bool operator==(const InitialVerifier&, const InitialVerifier&) = default;
};

struct InitialBalance {
    Bytes public_key;
    Role role = Role::Customer;
    Quantity quantity = 0;
    friend bool operator==(const InitialBalance&, const InitialBalance&) = default;
};

struct GenesisConfig {
    Bytes admin_public_key;
    std::vector<InitialVerifier> initial_verifiers;
    std::vector<InitialBalance> initial_stable_balances;
    std::string chain_id;
    friend bool operator==(const GenesisConfig&, const GenesisConfig&) = default;
};

Value encode(const GenesisConfig& g);
GenesisConfig decode_genesis(const Value& v);

/// Height-0 state. Throws DuplicateAccount, InvalidQuantity, ReservedAddress.
WorldState build_genesis(const GenesisConfig& config);

void write_genesis(const std::filesystem::path& file, const GenesisConfig& config);
GenesisConfig read_genesis(const std::filesystem::path& file);
/// read_genesis + build_genesis. Throws ParseError on malformed input.
WorldState load_genesis(const std::filesystem::path& file);

/// Canonical one-line form of a log entry, without the trailing newline.
std::string encode_log_line(const LogEntry& entry);
/// Throws LedgerError(ParseError) on malformed input or a hash mismatch.
LogEntry decode_log_line(std::string_view line);

/// Appends one line and flushes. Throws IoError.
void append_tx(const std::filesystem::path& log, const LogEntry& entry);

/// Missing or empty file reads as an empty log. Throws CorruptLineError for
/// the first line that does not parse, fails its hash check, or lacks a
/// terminating newline.
std::vector<LogEntry> read_log(const std::filesystem::path& log);

/// Truncates the log after its last intact line. Returns the number of
/// entries kept.
std::size_t recover_log(const std::filesystem::path& log);

void append_block(const std::filesystem::path& file, const Block& block);
/// Throws CorruptLineError for a line that does not decode.
std::vector<Block> read_blocks(const std::filesystem::path& file);

struct Snapshot {
    std::string chain_id;
    Height height = 0;
    Hash32 root;
    WorldState state;
};

/// Writes to a temporary sibling and renames it into place.
void write_snapshot(const std::filesystem::path& file, const WorldState& state, Height height);

/// Verifies the embedded root against the state section before decoding.
/// Throws ParseError or RootMismatch.
Snapshot read_snapshot(const std::filesystem::path& file);

/// Parses snapshot text; exposed for tamper tests.
Snapshot parse_snapshot(std::string_view text);
std::string render_snapshot(const WorldState& state, Height height);

std::string read_file(const std::filesystem::path& file);
/// Temp file plus rename.
void write_file_atomic(const std::filesystem::path& file, std::string_view contents);

}  // namespace carbon::storage
