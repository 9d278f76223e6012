#include "carbon/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include "carbon/codec.hpp"
#include "carbon/crypto.hpp"
#include "carbon/ledger.hpp"
#include "carbon/quorum.hpp"
#include "carbon/registry.hpp"
#include "carbon/storage.hpp"
#include "carbon/token.hpp"

namespace carbon::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const SignatureScheme& cli_scheme() { return ed25519_scheme(); }

std::optional<Role> parse_role(std::string_view s) {
    if (s == "verifier" || s == "Verifier") return Role::Verifier;
    if (s == "credit-holder" || s == "CreditHolder") return Role::CreditHolder;
    if (s == "customer" || s == "Customer") return Role::Customer;
    return std::nullopt;
}

class Keystore {
public:
    static Keystore load(const fs::path& file) {
        Keystore ks;
        if (!fs::exists(file)) return ks;
        std::string text = storage::read_file(file);
        if (!text.empty() && text.back() == '\n') text.pop_back();
        Value doc = canonical_parse(text);
        for (const auto& [name, entry] : doc.at("keys").as_map())
            ks.keys_[name] = KeyPair{entry.at("public_key").as_bytes(), entry.at("secret_key").as_bytes()};
        return ks;
    }

    void save(const fs::path& file) const {
        Value::Map keys;
        for (const auto& [name, kp] : keys_)
            keys.emplace(name, Value::map()
                                   .set("public_key", Value::bytes(kp.public_key))
                                   .set("secret_key", Value::bytes(kp.secret_key)));
        Value doc = Value::map().set("keys", Value::map(std::move(keys)));
        storage::write_file_atomic(file, canonical_serialize(doc) + "\n");
    }

    [[nodiscard]] const KeyPair* find(const std::string& name) const {
        auto it = keys_.find(name);
        return it == keys_.end() ? nullptr : &it->second;
    }

    const KeyPair& add(const std::string& name, KeyPair kp) { return keys_[name] = std::move(kp); }

    [[nodiscard]] std::optional<std::string> name_of(const Address& a) const {
        for (const auto& [name, kp] : keys_)
            if (derive_address(kp.public_key) == a) return name;
        return std::nullopt;
    }

private:
    std::map<std::string, KeyPair> keys_;
};

struct GlobalFlags {
    std::string data_dir = "carbon-data";
    std::string as;
    std::optional<std::uint64_t> timestamp;
    bool json = false;
};

class Session {
public:
    Session(GlobalFlags flags, std::ostream& out) : flags_(std::move(flags)), out_(out) {}

    [[nodiscard]] fs::path path(const char* file) const { return fs::path(flags_.data_dir) / file; }

    [[nodiscard]] Keystore keystore() const { return Keystore::load(path(kKeystoreFile)); }

    [[nodiscard]] WorldState genesis() const {
        if (!fs::exists(path(kGenesisFile)))
            throw LedgerError(ErrorCode::IoError, "no genesis in " + flags_.data_dir + " (run init)");
        return storage::load_genesis(path(kGenesisFile));
    }

    [[nodiscard]] Ledger ledger() const {
        return Ledger::restore(genesis(), cli_scheme(), storage::read_blocks(path(kBlocksFile)),
                               storage::read_log(path(kLogFile)));
    }

    /// Keystore name or 64-char hex address.
    [[nodiscard]] Address resolve(const std::string& target) const {
        Keystore ks = keystore();
        if (const auto* kp = ks.find(target)) return derive_address(kp->public_key);
        try {
            return Address::from_hex(target);
        } catch (const std::invalid_argument&) {
            throw UsageError("unknown identity '" + target + "'");
        }
    }

    [[nodiscard]] std::string label(const Address& a) const {
        if (a == kBurnSink) return "burn-sink";
        if (a == pool_reserve_address()) return "pool";
        if (auto name = keystore().name_of(a)) return *name;
        return a.hex();
    }

    [[nodiscard]] KeyPair signer() const {
        if (flags_.as.empty()) throw UsageError("this command needs --as <identity>");
        Keystore ks = keystore();
        const auto* kp = ks.find(flags_.as);
        if (kp == nullptr) throw UsageError("no key named '" + flags_.as + "' in the keystore");
        return *kp;
    }

    [[nodiscard]] std::uint64_t timestamp() const {
        if (flags_.timestamp) return *flags_.timestamp;
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
                .count());
    }

    void human(const std::string& line) const {
        if (!flags_.json) out_ << line << '\n';
    }

    void machine(const Value& v) const { out_ << canonical_serialize(v) << '\n'; }

    /// Signs, applies, and on acceptance appends the transaction to the log.
    int submit(Payload p) const {
        KeyPair keys = signer();
        Ledger ledger = this->ledger();
        Address sender = derive_address(keys.public_key);
        auto tx = sign_transaction(cli_scheme(), keys, ledger.state().nonce_of(sender), std::move(p));
        Receipt r = ledger.submit(tx);
        if (r.accepted()) storage::append_tx(path(kLogFile), ledger.log().back());

        if (r.accepted()) {
            human("accepted " + r.tx_hash.hex());
            for (const auto& [k, v] : r.outputs) human(k + ": " + std::to_string(v));
        } else {
            human("rejected: " + std::string(to_string(*r.rejection)));
        }
        machine(encode(r));
        return r.accepted() ? kExitOk : kExitDomainError;
    }

    [[nodiscard]] const GlobalFlags& flags() const { return flags_; }

private:
    GlobalFlags flags_;
    std::ostream& out_;
};

Hash32 parse_evidence(const std::string& hex, const std::string& text) {
    if (!hex.empty()) {
        try {
            return Hash32::from_hex(hex);
        } catch (const std::invalid_argument&) {
            throw UsageError("--evidence must be 64 lowercase hex characters");
        }
    }
    return sha256(text);
}

KeyPair make_key(const std::string& name, const std::string& seed_prefix) {
    if (seed_prefix.empty()) return cli_scheme().keypair_from_seed(random_seed());
    auto seed = sha256(seed_prefix + ":" + name);
    return cli_scheme().keypair_from_seed(seed.view());
}

int cmd_init(const Session& s, const std::string& chain_id, const std::string& admin,
             const std::vector<std::string>& verifiers, const std::vector<std::string>& funds,
             const std::string& key_seed) {
    fs::create_directories(s.flags().data_dir);
    if (fs::exists(s.path(kGenesisFile)))
        throw LedgerError(ErrorCode::IoError, "genesis already exists in " + s.flags().data_dir);

    Keystore ks = s.keystore();
    auto key_for = [&](const std::string& name) -> const KeyPair& {
        if (const auto* kp = ks.find(name)) return *kp;
        return ks.add(name, make_key(name, key_seed));
    };

    storage::GenesisConfig g;
    g.chain_id = chain_id;
    g.admin_public_key = key_for(admin).public_key;
    for (const auto& v : verifiers) g.initial_verifiers.push_back({key_for(v).public_key, v});
    for (const auto& f : funds) {
        auto first = f.find(':');
        auto second = f.find(':', first == std::string::npos ? first : first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw UsageError("--fund expects NAME:ROLE:QUANTITY");
        auto role = parse_role(f.substr(first + 1, second - first - 1));
        if (!role) throw UsageError("unknown role in --fund " + f);
        std::uint64_t qty = 0;
        try {
            std::size_t used = 0;
            std::string digits = f.substr(second + 1);
            qty = std::stoull(digits, &used);
            if (used != digits.size() || digits.empty() || digits[0] == '-') throw std::invalid_argument(f);
        } catch (const std::exception&) {
            throw UsageError("bad quantity in --fund " + f);
        }
        g.initial_stable_balances.push_back({key_for(f.substr(0, first)).public_key, *role, qty});
    }

    WorldState state = storage::build_genesis(g);
    ks.save(s.path(kKeystoreFile));
    storage::write_genesis(s.path(kGenesisFile), g);
    // Touch the log so the data dir is complete.
    if (!fs::exists(s.path(kLogFile))) storage::write_file_atomic(s.path(kLogFile), "");

    Hash32 root = state_root(state);
    s.human("initialized chain '" + chain_id + "' with " + std::to_string(state.accounts.size()) + " accounts");
    s.human("genesis root " + root.hex());
    s.machine(Value::map()
                  .set("chain_id", Value::text(chain_id))
                  .set("genesis_root", codec::encode(root))
                  .set("accounts", Value::uint(state.accounts.size())));
    return kExitOk;
}

int cmd_keygen(const Session& s, const std::string& name, const std::string& seed) {
    fs::create_directories(s.flags().data_dir);
    Keystore ks = s.keystore();
    if (ks.find(name) != nullptr) throw UsageError("key '" + name + "' already exists");
    const KeyPair& kp = ks.add(name, make_key(name, seed));
    ks.save(s.path(kKeystoreFile));
    Address a = derive_address(kp.public_key);
    s.human(name + " " + a.hex());
    s.machine(Value::map()
                  .set("name", Value::text(name))
                  .set("address", codec::encode(a))
                  .set("public_key", Value::bytes(kp.public_key)));
    return kExitOk;
}

int cmd_balances(const Session& s, const std::string& of) {
    Ledger ledger = s.ledger();
    const auto& st = ledger.state();
    auto view = token::query_balances(st);

    auto row = [&](const Address& a) {
        return Value::map()
            .set("address", codec::encode(a))
            .set("carbon", Value::uint(st.token.balance(a)))
            .set("stable", Value::uint(st.token.stable_balance(a)))
            .set("lp_shares", Value::uint(st.lp_shares.of(a)));
    };

    Value::List rows;
    if (!of.empty()) {
        Address a = s.resolve(of);
        s.human(s.label(a) + " carbon=" + std::to_string(st.token.balance(a)) +
                " stable=" + std::to_string(st.token.stable_balance(a)) +
                " lp_shares=" + std::to_string(st.lp_shares.of(a)));
        rows.push_back(row(a));
    } else {
        std::set<Address> holders;
        for (const auto& [a, q] : st.token.balances) holders.insert(a);
        for (const auto& [a, q] : st.token.stable_balances) holders.insert(a);
        for (const auto& [a, q] : st.lp_shares.shares) holders.insert(a);
        for (const auto& a : holders) {
            s.human(s.label(a) + " carbon=" + std::to_string(st.token.balance(a)) +
                    " stable=" + std::to_string(st.token.stable_balance(a)) +
                    " lp_shares=" + std::to_string(st.lp_shares.of(a)));
            rows.push_back(row(a));
        }
    }
    s.human("total_minted=" + std::to_string(view.total_minted) + " burned=" + std::to_string(view.burned) +
            " stable_total=" + std::to_string(view.stable_total) +
            " certificates=" + std::to_string(view.certificates.size()));
    s.machine(Value::map()
                  .set("accounts", Value::list(std::move(rows)))
                  .set("total_minted", Value::uint(view.total_minted))
                  .set("burned", Value::uint(view.burned))
                  .set("stable_total", Value::uint(view.stable_total))
                  .set("certificates", Value::uint(view.certificates.size())));
    return kExitOk;
}

int cmd_certificates(const Session& s, const std::string& owner) {
    Ledger ledger = s.ledger();
    auto view = token::query_balances(ledger.state());
    std::optional<Address> filter;
    if (!owner.empty()) filter = s.resolve(owner);
    Value::List list;
    for (const auto& c : view.certificates) {
        if (filter && c.owner != *filter) continue;
        s.human("certificate #" + std::to_string(c.id) + " owner=" + s.label(c.owner) +
                " tonnage=" + std::to_string(c.tonnage) + " burn=" + std::to_string(c.burn_id) +
                " issued_at=" + std::to_string(c.issued_at));
        list.push_back(Value::map()
                           .set("id", Value::uint(c.id))
                           .set("owner", codec::encode(c.owner))
                           .set("tonnage", Value::uint(c.tonnage))
                           .set("burn_id", Value::uint(c.burn_id))
                           .set("issued_at", Value::uint(c.issued_at)));
    }
    s.machine(Value::map().set("certificates", Value::list(std::move(list))));
    return kExitOk;
}

int cmd_tally(const Session& s, RecordId id) {
    Ledger ledger = s.ledger();
    auto t = quorum::tally(ledger.state(), id);
    s.human("proposal #" + std::to_string(id) + " " + std::to_string(t.count) + "/" + std::to_string(t.needed) +
            " " + std::string(to_string(t.status)));
    s.machine(Value::map()
                  .set("proposal_id", Value::uint(id))
                  .set("count", Value::uint(t.count))
                  .set("needed", Value::uint(t.needed))
                  .set("status", Value::text(std::string(to_string(t.status)))));
    return kExitOk;
}

int cmd_lookup(const Session& s, const std::string& target) {
    Ledger ledger = s.ledger();
    const auto& rec = registry::lookup(ledger.state(), s.resolve(target));
    s.human(s.label(rec.id) + " role=" + std::string(to_string(rec.role)) +
            " accredited=" + (rec.accredited ? "true" : "false") + " registered_at=" +
            std::to_string(rec.registered_at));
    s.machine(codec::encode(rec));
    return kExitOk;
}

int cmd_price(const Session& s) {
    Ledger ledger = s.ledger();
    auto p = amm::spot_price(ledger.state());
    const auto& pool = *ledger.state().pool;
    std::string dec = amm::to_decimal(p, 6);
    s.human("price: " + std::to_string(p.numerator) + "/" + std::to_string(p.denominator) + " stable per carbon (" +
            dec + ")");
    s.human("reserves: carbon=" + std::to_string(pool.carbon_reserve) +
            " stable=" + std::to_string(pool.stable_reserve));
    s.machine(Value::map()
                  .set("numerator", Value::uint(p.numerator))
                  .set("denominator", Value::uint(p.denominator))
                  .set("decimal", Value::text(dec))
                  .set("carbon_reserve", Value::uint(pool.carbon_reserve))
                  .set("stable_reserve", Value::uint(pool.stable_reserve)));
    return kExitOk;
}

int cmd_seal(const Session& s) {
    Ledger ledger = s.ledger();
    const Block& b = ledger.seal(s.timestamp());
    storage::append_block(s.path(kBlocksFile), b);
    s.human("sealed block " + std::to_string(b.header.height) + " with " + std::to_string(b.transactions.size()) +
            " transactions");
    s.human("hash " + b.hash.hex());
    s.machine(Value::map()
                  .set("height", Value::uint(b.header.height))
                  .set("hash", codec::encode(b.hash))
                  .set("state_root", codec::encode(b.header.state_root))
                  .set("transactions", Value::uint(b.transactions.size())));
    return kExitOk;
}

int cmd_verify(const Session& s) {
    WorldState genesis = s.genesis();
    auto blocks = storage::read_blocks(s.path(kBlocksFile));
    auto violation = verify_chain(genesis, blocks, cli_scheme());
    if (!violation) {
        s.human("ok");
        s.machine(Value::map().set("status", Value::text("ok")).set("blocks", Value::uint(blocks.size())));
        return kExitOk;
    }
    s.human("violation at height " + std::to_string(violation->height) + ": " +
            std::string(to_string(violation->kind)) + (violation->detail.empty() ? "" : " (" + violation->detail + ")"));
    s.machine(Value::map()
                  .set("status", Value::text("violation"))
                  .set("height", Value::uint(violation->height))
                  .set("kind", Value::text(std::string(to_string(violation->kind)))));
    return kExitDomainError;
}

int cmd_replay(const Session& s) {
    WorldState genesis = s.genesis();
    auto log = storage::read_log(s.path(kLogFile));
    WorldState state = replay(genesis, log, cli_scheme());
    Hash32 root = state_root(state);
    Ledger live = s.ledger();
    bool matches = state_root(live.state()) == root;
    s.human("replayed " + std::to_string(log.size()) + " transactions");
    s.human("state_root " + root.hex());
    s.machine(Value::map()
                  .set("transactions", Value::uint(log.size()))
                  .set("state_root", codec::encode(root))
                  .set("matches_chain", Value::boolean(matches)));
    return matches ? kExitOk : kExitDomainError;
}

int cmd_snapshot_write(const Session& s, std::string out_path) {
    WorldState genesis = s.genesis();
    auto blocks = storage::read_blocks(s.path(kBlocksFile));
    Height height = blocks.empty() ? 0 : blocks.back().header.height;
    // Snapshot the last sealed state so its root matches a block header.
    std::vector<LogEntry> sealed;
    for (auto& e : storage::read_log(s.path(kLogFile)))
        if (e.height <= height) sealed.push_back(std::move(e));
    WorldState state = replay(genesis, sealed, cli_scheme());
    if (out_path.empty()) {
        fs::create_directories(s.path("snapshots"));
        out_path = (s.path("snapshots") / (std::to_string(height) + ".snap")).string();
    }
    storage::write_snapshot(out_path, state, height);
    Hash32 root = state_root(state);
    s.human("wrote " + out_path + " at height " + std::to_string(height));
    s.machine(Value::map()
                  .set("path", Value::text(out_path))
                  .set("height", Value::uint(height))
                  .set("state_root", codec::encode(root)));
    return kExitOk;
}

int cmd_snapshot_read(const Session& s, const std::string& in_path) {
    auto snap = storage::read_snapshot(in_path);
    s.human("snapshot chain=" + snap.chain_id + " height=" + std::to_string(snap.height) + " root " +
            snap.root.hex());
    s.machine(Value::map()
                  .set("chain_id", Value::text(snap.chain_id))
                  .set("height", Value::uint(snap.height))
                  .set("state_root", codec::encode(snap.root)));
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"carbonctl: carbon credit ledger"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    std::uint64_t ts = 0;
    app.add_option("--data-dir", flags.data_dir, "Data directory")->capture_default_str();
    app.add_option("--as", flags.as, "Signing identity from the keystore");
    auto* ts_opt = app.add_option("--timestamp", ts, "Block time in seconds (default: wall clock)");
    app.add_flag("--json", flags.json, "Machine-readable output only");

    // init
    std::string chain_id = "carbon-local", admin = "admin", key_seed;
    std::vector<std::string> init_verifiers, init_funds;
    auto* init = app.add_subcommand("init", "Create genesis and keystore");
    init->add_option("--chain-id", chain_id)->capture_default_str();
    init->add_option("--admin", admin, "Admin identity name")->capture_default_str();
    init->add_option("--verifier", init_verifiers, "Accredited verifier identity (repeatable)");
    init->add_option("--fund", init_funds, "NAME:ROLE:QUANTITY stable funding (repeatable)");
    init->add_option("--key-seed", key_seed, "Derive keys deterministically from this text");

    std::string key_name, seed;
    auto* keygen = app.add_subcommand("keygen", "Add a named keypair to the keystore");
    keygen->add_option("name", key_name)->required();
    keygen->add_option("--seed", seed, "Derive the key deterministically from this text");

    std::string role_text, display_name;
    auto* reg = app.add_subcommand("register", "Register the --as identity");
    reg->add_option("--role", role_text, "verifier | credit-holder | customer")->required();
    reg->add_option("--name", display_name, "Display name");

    std::string target;
    bool revoke = false;
    auto* accredit = app.add_subcommand("accredit", "Admin: accredit or revoke a verifier");
    accredit->add_option("target", target)->required();
    accredit->add_flag("--revoke", revoke);

    std::string kind = "unspecified", evidence_hex, evidence_text;
    Quantity tonnage = 0;
    auto* submit = app.add_subcommand("submit-credit", "Credit holder: submit a credit for verification");
    submit->add_option("--kind", kind, "Project kind tag")->capture_default_str();
    submit->add_option("--tonnage", tonnage, "Base units (1 tCO2e = 1000000)")->required();
    auto* ev_hex = submit->add_option("--evidence", evidence_hex, "32-byte evidence hash, hex");
    submit->add_option("--evidence-text", evidence_text, "Evidence text, hashed with SHA-256")->excludes(ev_hex);

    RecordId proposal_id = 0;
    auto* approve = app.add_subcommand("approve", "Verifier: approve a proposal");
    approve->add_option("proposal-id", proposal_id)->required();

    auto* tally_cmd = app.add_subcommand("tally", "Show a proposal's approval count");
    tally_cmd->add_option("proposal-id", proposal_id)->required();

    Quantity amount = 0;
    auto* transfer = app.add_subcommand("transfer", "Transfer carbon tokens");
    transfer->add_option("--to", target)->required();
    transfer->add_option("--amount", amount, "Base units")->required();

    auto* burn = app.add_subcommand("burn", "Burn carbon tokens for a retirement certificate");
    burn->add_option("--amount", amount, "Base units")->required();

    std::string owner;
    auto* certs = app.add_subcommand("certificates", "List retirement certificates");
    certs->add_option("--owner", owner);

    std::string of;
    auto* balances = app.add_subcommand("balances", "Show balances and supply");
    balances->add_option("--of", of);

    auto* lookup = app.add_subcommand("lookup", "Show a registry record");
    lookup->add_option("target", target)->required();

    Quantity carbon_amt = 0, stable_amt = 0, shares = 0, min_out = 0;
    std::string side;
    auto* pool = app.add_subcommand("pool", "Automated market maker");
    pool->require_subcommand(1);
    auto* pool_create = pool->add_subcommand("create", "Create the pool");
    pool_create->add_option("--carbon", carbon_amt)->required();
    pool_create->add_option("--stable", stable_amt)->required();
    auto* pool_add = pool->add_subcommand("add", "Add liquidity");
    pool_add->add_option("--carbon", carbon_amt)->required();
    pool_add->add_option("--stable", stable_amt)->required();
    auto* pool_remove = pool->add_subcommand("remove", "Redeem liquidity shares");
    pool_remove->add_option("--shares", shares)->required();
    auto* pool_swap = pool->add_subcommand("swap", "Swap an exact input amount");
    pool_swap->add_option("--in", side, "stable | carbon")->required()->check(CLI::IsMember({"stable", "carbon"}));
    pool_swap->add_option("--amount", amount)->required();
    pool_swap->add_option("--min-out", min_out)->capture_default_str();
    auto* pool_price = pool->add_subcommand("price", "Spot price, stable per carbon");

    auto* seal = app.add_subcommand("seal", "Seal pending transactions into a block");

    auto* chain = app.add_subcommand("chain", "Chain inspection");
    chain->require_subcommand(1);
    auto* chain_verify = chain->add_subcommand("verify", "Replay and verify every block");

    auto* replay_cmd = app.add_subcommand("replay", "Replay the transaction log from genesis");

    std::string snap_path;
    auto* snapshot = app.add_subcommand("snapshot", "State snapshots");
    snapshot->require_subcommand(1);
    auto* snap_write = snapshot->add_subcommand("write", "Write a snapshot of the last sealed state");
    snap_write->add_option("--out", snap_path);
    auto* snap_read = snapshot->add_subcommand("read", "Read and verify a snapshot");
    snap_read->add_option("path", snap_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (*ts_opt) flags.timestamp = ts;

    Session s(flags, out);
    try {
        if (*init) return cmd_init(s, chain_id, admin, init_verifiers, init_funds, key_seed);
        if (*keygen) return cmd_keygen(s, key_name, seed);
        if (*reg) {
            auto role = parse_role(role_text);
            if (!role) throw UsageError("unknown role '" + role_text + "'");
            return s.submit(payload::Register{*role, s.signer().public_key, display_name});
        }
        if (*accredit) return s.submit(payload::Accredit{s.resolve(target), !revoke});
        if (*submit)
            return s.submit(payload::SubmitCredit{kind, parse_evidence(evidence_hex, evidence_text), tonnage});
        if (*approve) return s.submit(payload::Approve{proposal_id});
        if (*tally_cmd) return cmd_tally(s, proposal_id);
        if (*transfer) return s.submit(payload::Transfer{s.resolve(target), amount});
        if (*burn) return s.submit(payload::Burn{amount});
        if (*certs) return cmd_certificates(s, owner);
        if (*balances) return cmd_balances(s, of);
        if (*lookup) return cmd_lookup(s, target);
        if (*pool_create) return s.submit(payload::CreatePool{carbon_amt, stable_amt});
        if (*pool_add) return s.submit(payload::AddLiquidity{carbon_amt, stable_amt});
        if (*pool_remove) return s.submit(payload::RemoveLiquidity{shares});
        if (*pool_swap) {
            auto dir = side == "stable" ? amm::Direction::StableIn : amm::Direction::CarbonIn;
            return s.submit(payload::Swap{dir, amount, min_out});
        }
        if (*pool_price) return cmd_price(s);
        if (*seal) return cmd_seal(s);
        if (*chain_verify) return cmd_verify(s);
        if (*replay_cmd) return cmd_replay(s);
        if (*snap_write) return cmd_snapshot_write(s, snap_path);
        if (*snap_read) return cmd_snapshot_read(s, snap_path);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LedgerError& e) {
        if (!flags.json) out << "error: " << to_string(e.code()) << '\n';
        out << canonical_serialize(Value::map()
                                       .set("status", Value::text("error"))
                                       .set("reason", Value::text(std::string(to_string(e.code())))))
            << '\n';
        err << e.what() << '\n';
        return kExitDomainError;
    }
    err << "usage error: no command\n";
    return kExitUsage;
}

}  // namespace carbon::cli
