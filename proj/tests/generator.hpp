#pragma once

// Random transaction workload over a fixed cast of accounts. Most generated
// transactions are valid; a tunable share are deliberately broken.

#include <random>
#include <string>
#include <vector>

#include "carbon/arith.hpp"
#include "support.hpp"

namespace carbon::test {

struct Cast {
    std::vector<std::string> verifiers;
    std::vector<std::string> holders;
    std::vector<std::string> customers;

    [[nodiscard]] std::vector<std::string> traders() const {
        auto all = holders;
        all.insert(all.end(), customers.begin(), customers.end());
        return all;
    }
};

inline Cast default_cast(std::size_t verifiers = 5) {
    Cast c;
    for (std::size_t i = 1; i <= verifiers; ++i) c.verifiers.push_back("v" + std::to_string(i));
    c.holders = {"h1", "h2", "h3"};
    c.customers = {"c1", "c2", "c3"};
    return c;
}

inline storage::GenesisConfig cast_genesis(const Cast& cast, const SignatureScheme& scheme = mock_scheme()) {
    std::vector<Funding> funds;
    for (const auto& h : cast.holders) funds.push_back({h, Role::CreditHolder, 1'000'000'000'000});
    for (const auto& c : cast.customers) funds.push_back({c, Role::Customer, 1'000'000'000'000});
    return make_genesis(cast.verifiers.size(), funds, scheme);
}

class Workload {
public:
    Workload(Harness& h, Cast cast, std::uint64_t seed, double broken_share = 0.1)
        : h_(h), cast_(std::move(cast)), rng_(seed), broken_share_(broken_share) {}

    /// Generates and submits one transaction.
    Receipt step() {
        auto [who, p] = next_payload();
        if (std::bernoulli_distribution(broken_share_)(rng_)) return send_broken(who, std::move(p));
        return h_.send(who, std::move(p));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    const std::string& pick(const std::vector<std::string>& v) { return v[rng_() % v.size()]; }

    Quantity amount_up_to(Quantity cap) {
        if (cap == 0) return uniform(rng_, 0, 3);
        // Mostly within balance, sometimes everything, occasionally one over.
        switch (rng_() % 8) {
            case 0: return cap;
            case 1: return cap + 1;
            default: return uniform(rng_, 1, cap);
        }
    }

    std::pair<std::string, Payload> next_payload() {
        const auto& s = h_.state();
        auto traders = cast_.traders();
        switch (rng_() % 11) {
            case 0:
            case 1: {
                auto t = (rng_() % 20 == 0) ? 0 : uniform(rng_, 1, 50'000'000);
                return {pick(cast_.holders), payload::SubmitCredit{"project", sha256(std::to_string(rng_())), t}};
            }
            case 2:
            case 3: {
                RecordId id = s.counters.next_proposal > 1 ? uniform(rng_, 1, s.counters.next_proposal - 1) : 1;
                // Prefer open proposals so quorums actually complete.
                for (int tries = 0; tries < 4; ++tries) {
                    auto it = s.proposals.find(id);
                    if (it != s.proposals.end() && it->second.status == ProposalStatus::Open) break;
                    id = uniform(rng_, 1, s.counters.next_proposal);
                }
                return {pick(cast_.verifiers), payload::Approve{id}};
            }
            case 4: {
                const auto& from = pick(traders);
                const auto& to = (rng_() % 25 == 0) ? std::string("ghost") : pick(traders);
                Address dest = rng_() % 40 == 0 ? kBurnSink : h_.addr(to);
                return {from, payload::Transfer{dest, amount_up_to(s.token.balance(h_.addr(from)))}};
            }
            case 5: {
                const auto& who = pick(traders);
                return {who, payload::Burn{amount_up_to(s.token.balance(h_.addr(who)) / 2)}};
            }
            case 6: {
                const auto& who = pick(traders);
                auto c = s.token.balance(h_.addr(who));
                return {who, payload::CreatePool{amount_up_to(c / 2), uniform(rng_, 1, 5'000'000)}};
            }
            case 7: {
                const auto& who = pick(traders);
                auto c = s.token.balance(h_.addr(who));
                Quantity carbon = amount_up_to(c / 3);
                Quantity stable = carbon;
                if (s.pool && s.pool->carbon_reserve > 0)
                    stable = static_cast<Quantity>(static_cast<u128>(carbon) * s.pool->stable_reserve /
                                                   s.pool->carbon_reserve) +
                             uniform(rng_, 0, 3);
                return {who, payload::AddLiquidity{carbon, stable}};
            }
            case 8: {
                const auto& who = pick(traders);
                return {who, payload::RemoveLiquidity{amount_up_to(s.lp_shares.of(h_.addr(who)))}};
            }
            case 9:
            default: {
                const auto& who = pick(traders);
                bool stable_in = rng_() & 1;
                Quantity cap = stable_in ? 2'000'000 : s.token.balance(h_.addr(who)) / 4;
                Quantity in = amount_up_to(cap);
                Quantity min_out = rng_() % 10 == 0 ? UINT64_MAX / 2 : 0;
                return {who, payload::Swap{stable_in ? amm::Direction::StableIn : amm::Direction::CarbonIn, in,
                                           min_out}};
            }
        }
    }

    Receipt send_broken(const std::string& who, Payload p) {
        auto tx = h_.sign(who, std::move(p));
        switch (rng_() % 3) {
            case 0: tx.nonce += 1 + rng_() % 3; break;
            case 1: tx.signature[rng_() % tx.signature.size()] ^= 0x20; break;
            default: tx.sender = address_of("ghost"); break;
        }
        return h_.ledger().submit(tx);
    }

    Harness& h_;
    Cast cast_;
    std::mt19937_64 rng_;
    double broken_share_;
};

}  // namespace carbon::test
