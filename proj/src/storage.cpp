#include "carbon/storage.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "carbon/arith.hpp"
#include "carbon/codec.hpp"
#include "carbon/crypto.hpp"
#include "carbon/registry.hpp"

namespace carbon::storage {

namespace fs = std::filesystem;

namespace {

void append_line(const fs::path& file, std::string_view line) {
    std::ofstream out(file, std::ios::binary | std::ios::app);
    if (!out) fail(ErrorCode::IoError, "cannot open " + file.string());
    out << line << '\n';
    out.flush();
    if (!out) fail(ErrorCode::IoError, "write failed on " + file.string());
}

/// Splits into complete lines. A final fragment without '\n' is reported
/// through `partial`.
std::vector<std::string_view> split_lines(std::string_view text, bool& partial) {
    std::vector<std::string_view> lines;
    partial = false;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            partial = true;
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

}  // namespace

std::string read_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const fs::path& file, std::string_view contents) {
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorCode::IoError, "cannot create " + tmp.string());
        out << contents;
        out.flush();
        if (!out) fail(ErrorCode::IoError, "write failed on " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec) fail(ErrorCode::IoError, "rename failed: " + ec.message());
}

Value encode(const GenesisConfig& g) {
    Value::List verifiers;
    for (const auto& v : g.initial_verifiers)
        verifiers.push_back(Value::map()
                                .set("public_key", Value::bytes(v.public_key))
                                .set("display_name", Value::text(v.display_name)));
    Value::List balances;
    for (const auto& b : g.initial_stable_balances)
        balances.push_back(Value::map()
                               .set("public_key", Value::bytes(b.public_key))
                               .set("role", Value::text(std::string(to_string(b.role))))
                               .set("quantity", Value::uint(b.quantity)));
    return Value::map()
        .set("admin_public_key", Value::bytes(g.admin_public_key))
        .set("initial_verifiers", Value::list(std::move(verifiers)))
        .set("initial_stable_balances", Value::list(std::move(balances)))
        .set("chain_id", Value::text(g.chain_id));
}

GenesisConfig decode_genesis(const Value& v) {
    GenesisConfig g;
    g.admin_public_key = v.at("admin_public_key").as_bytes();
    for (const auto& item : v.at("initial_verifiers").as_list())
        g.initial_verifiers.push_back({item.at("public_key").as_bytes(), item.at("display_name").as_text()});
    for (const auto& item : v.at("initial_stable_balances").as_list()) {
        auto role = role_from_string(item.at("role").as_text());
        if (!role) fail(ErrorCode::ParseError, "unknown role in genesis");
        g.initial_stable_balances.push_back({item.at("public_key").as_bytes(), *role, item.at("quantity").as_uint()});
    }
    g.chain_id = v.at("chain_id").as_text();
    if (!(encode(g) == v)) fail(ErrorCode::ParseError, "genesis document has unexpected fields");
    return g;
}

WorldState build_genesis(const GenesisConfig& config) {
    WorldState s;
    s.chain_id = config.chain_id;
    s.admin = derive_address(config.admin_public_key);

    registry::insert_genesis_account(
        s, AccountRecord{s.admin, Role::Admin, config.admin_public_key, "admin", false, 0});
    for (const auto& v : config.initial_verifiers) {
        registry::insert_genesis_account(
            s, AccountRecord{derive_address(v.public_key), Role::Verifier, v.public_key, v.display_name, true, 0});
    }
    for (const auto& b : config.initial_stable_balances) {
        if (b.quantity == 0) fail(ErrorCode::InvalidQuantity, "genesis balances must be positive");
        if (b.role == Role::Admin) fail(ErrorCode::RoleMismatch, "admin cannot be funded as a second account");
        Address id = derive_address(b.public_key);
        registry::insert_genesis_account(s, AccountRecord{id, b.role, b.public_key, "", false, 0});
        s.token.stable_balances[id] = b.quantity;
        s.token.stable_total = checked_add(s.token.stable_total, b.quantity);
    }
    return s;
}

void write_genesis(const fs::path& file, const GenesisConfig& config) {
    write_file_atomic(file, canonical_serialize(encode(config)) + "\n");
}

GenesisConfig read_genesis(const fs::path& file) {
    std::string text = read_file(file);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return decode_genesis(canonical_parse(text));
}

WorldState load_genesis(const fs::path& file) { return build_genesis(read_genesis(file)); }

std::string encode_log_line(const LogEntry& entry) {
    Value v = Value::map()
                  .set("hash", codec::encode(tx_hash(entry.tx)))
                  .set("height", Value::uint(entry.height))
                  .set("tx", encode(entry.tx));
    return canonical_serialize(v);
}

LogEntry decode_log_line(std::string_view line) {
    Value v = canonical_parse(line);
    if (v.as_map().size() != 3) fail(ErrorCode::ParseError, "unexpected log fields");
    LogEntry e;
    e.height = v.at("height").as_uint();
    e.tx = decode_transaction(v.at("tx"));
    if (tx_hash(e.tx) != codec::decode_hash(v.at("hash"))) fail(ErrorCode::ParseError, "hash mismatch");
    return e;
}

void append_tx(const fs::path& log, const LogEntry& entry) { append_line(log, encode_log_line(entry)); }

std::vector<LogEntry> read_log(const fs::path& log) {
    if (!fs::exists(log)) return {};
    std::string text = read_file(log);
    bool partial = false;
    auto lines = split_lines(text, partial);
    std::vector<LogEntry> out;
    out.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (partial && i + 1 == lines.size()) throw CorruptLineError(i + 1, "incomplete final line");
        try {
            out.push_back(decode_log_line(lines[i]));
        } catch (const LedgerError& e) {
            throw CorruptLineError(i + 1, e.what());
        }
    }
    return out;
}

std::size_t recover_log(const fs::path& log) {
    if (!fs::exists(log)) return 0;
    std::string text = read_file(log);
    std::size_t kept = 0;
    std::size_t keep_bytes = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string::npos) break;
        try {
            decode_log_line(std::string_view(text).substr(start, nl - start));
        } catch (const LedgerError&) {
            break;
        }
        ++kept;
        keep_bytes = nl + 1;
        start = nl + 1;
    }
    if (keep_bytes != text.size()) write_file_atomic(log, std::string_view(text).substr(0, keep_bytes));
    return kept;
}

void append_block(const fs::path& file, const Block& block) {
    append_line(file, canonical_serialize(encode(block)));
}

std::vector<Block> read_blocks(const fs::path& file) {
    if (!fs::exists(file)) return {};
    std::string text = read_file(file);
    bool partial = false;
    auto lines = split_lines(text, partial);
    std::vector<Block> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (partial && i + 1 == lines.size()) throw CorruptLineError(i + 1, "incomplete final line");
        try {
            out.push_back(decode_block(canonical_parse(lines[i])));
        } catch (const LedgerError& e) {
            throw CorruptLineError(i + 1, e.what());
        }
    }
    return out;
}

std::string render_snapshot(const WorldState& state, Height height) {
    Value v = Value::map()
                  .set("chain_id", Value::text(state.chain_id))
                  .set("height", Value::uint(height))
                  .set("state", codec::encode(state))
                  .set("state_root", codec::encode(state_root(state)));
    return canonical_serialize(v);
}

void write_snapshot(const fs::path& file, const WorldState& state, Height height) {
    write_file_atomic(file, render_snapshot(state, height) + "\n");
}

Snapshot parse_snapshot(std::string_view text) {
    Value doc = canonical_parse(text);
    if (doc.as_map().size() != 4) fail(ErrorCode::ParseError, "unexpected snapshot fields");
    Snapshot snap;
    snap.chain_id = doc.at("chain_id").as_text();
    snap.height = doc.at("height").as_uint();
    snap.root = codec::decode_hash(doc.at("state_root"));
    // Canonical form is unique, so re-serializing reproduces the file bytes.
    Hash32 actual = sha256(canonical_serialize(doc.at("state")));
    if (actual != snap.root) fail(ErrorCode::RootMismatch, "embedded state does not hash to the header root");
    snap.state = codec::decode_state(doc.at("state"));
    if (snap.state.chain_id != snap.chain_id) fail(ErrorCode::ParseError, "chain id mismatch");
    return snap;
}

Snapshot read_snapshot(const fs::path& file) {
    std::string text = read_file(file);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return parse_snapshot(text);
}

}  // namespace carbon::storage
