#pragma once

// Shared fixtures for the unit, property and acceptance tests.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "carbon/crypto.hpp"
#include "carbon/ledger.hpp"
#include "carbon/storage.hpp"
#include "carbon/transaction.hpp"

namespace carbon::test {

inline KeyPair key_for(const std::string& name, const SignatureScheme& scheme = mock_scheme()) {
    return scheme.keypair_from_seed(sha256("test-key:" + name).view());
}

inline Address address_of(const std::string& name, const SignatureScheme& scheme = mock_scheme()) {
    return derive_address(key_for(name, scheme).public_key);
}

struct Funding {
    std::string name;
    Role role;
    Quantity stable;
};

/// Genesis with an admin named "admin" and verifiers "v1".."vN".
inline storage::GenesisConfig make_genesis(std::size_t verifiers, const std::vector<Funding>& funds = {},
                                           const SignatureScheme& scheme = mock_scheme()) {
    storage::GenesisConfig g;
    g.chain_id = "test-chain";
    g.admin_public_key = key_for("admin", scheme).public_key;
    for (std::size_t i = 1; i <= verifiers; ++i) {
        std::string name = "v" + std::to_string(i);
        g.initial_verifiers.push_back({key_for(name, scheme).public_key, name});
    }
    for (const auto& f : funds) g.initial_stable_balances.push_back({key_for(f.name, scheme).public_key, f.role, f.stable});
    return g;
}

/// A Ledger plus per-name nonce bookkeeping, so tests read like a script.
class Harness {
public:
    explicit Harness(const storage::GenesisConfig& g, const SignatureScheme& scheme = mock_scheme())
        : scheme_(&scheme), ledger_(storage::build_genesis(g), scheme) {}

    SignedTransaction sign(const std::string& who, Payload p) const {
        auto keys = key_for(who, *scheme_);
        return sign_transaction(*scheme_, keys, ledger_.state().nonce_of(derive_address(keys.public_key)),
                                std::move(p));
    }

    Receipt send(const std::string& who, Payload p) { return ledger_.submit(sign(who, std::move(p))); }

    Receipt register_as(const std::string& who, Role role) {
        return send(who, payload::Register{role, key_for(who, *scheme_).public_key, who});
    }

    Address addr(const std::string& who) const { return derive_address(key_for(who, *scheme_).public_key); }

    Ledger& ledger() { return ledger_; }
    const WorldState& state() const { return ledger_.state(); }
    const SignatureScheme& scheme() const { return *scheme_; }

private:
    const SignatureScheme* scheme_;
    Ledger ledger_;
};

/// Code of the LedgerError thrown by `fn`, or nullopt if it returned.
template <typename Fn>
std::optional<ErrorCode> error_of(Fn&& fn) {
    try {
        fn();
    } catch (const LedgerError& e) {
        return e.code();
    }
    return std::nullopt;
}

inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline Quantity carbon_sum(const WorldState& s) {
    Quantity total = 0;
    for (const auto& [a, q] : s.token.balances) total += q;
    return total;
}

inline Quantity stable_sum(const WorldState& s) {
    Quantity total = 0;
    for (const auto& [a, q] : s.token.stable_balances) total += q;
    return total;
}

}  // namespace carbon::test
