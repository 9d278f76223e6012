#include <doctest.h>

#include "carbon/codec.hpp"
#include "carbon/quorum.hpp"
#include "generator.hpp"

using namespace carbon;

namespace {

Quantity minted_by_submissions(const WorldState& s) {
    Quantity total = 0;
    for (const auto& [id, sub] : s.submissions)
        if (sub.status == SubmissionStatus::Minted) total += sub.tonnage;
    return total;
}

}  // namespace

TEST_CASE("property: rejected transactions change nothing, accepted ones consume one nonce") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        test::Harness h(test::cast_genesis(test::default_cast()));
        test::Workload w(h, test::default_cast(), seed, 0.2);
        for (int i = 0; i < 150; ++i) {
            Value before = codec::encode(h.state());
            auto nonces = h.state().nonces;
            auto r = w.step();
            if (!r.accepted()) {
                REQUIRE(codec::encode(h.state()) == before);
                continue;
            }
            // Exactly one account's nonce moved, by one.
            int moved = 0;
            for (const auto& [a, n] : h.state().nonces) {
                auto old = nonces.count(a) ? nonces.at(a) : 0;
                if (n != old) {
                    CHECK(n == old + 1);
                    ++moved;
                }
            }
            CHECK(moved == 1);
        }
    }
}

TEST_CASE("property: conservation and burn monotonicity") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        test::Harness h(test::cast_genesis(test::default_cast()));
        test::Workload w(h, test::default_cast(), seed);
        const Quantity stable_supply = h.state().token.stable_total;
        Quantity sink = 0;
        for (int i = 0; i < 200; ++i) {
            w.step();
            const auto& s = h.state();
            REQUIRE(test::carbon_sum(s) == s.token.total_minted);
            REQUIRE(test::stable_sum(s) == stable_supply);
            REQUIRE(s.token.stable_total == stable_supply);
            REQUIRE(s.token.balance(kBurnSink) >= sink);
            sink = s.token.balance(kBurnSink);
            if (s.pool) {
                CHECK(s.token.balance(pool_reserve_address()) == s.pool->carbon_reserve);
                CHECK(s.token.stable_balance(pool_reserve_address()) == s.pool->stable_reserve);
            }
            Quantity shares = 0;
            for (const auto& [a, q] : s.lp_shares.shares) shares += q;
            CHECK(shares == s.lp_shares.total_shares);
        }
    }
}

TEST_CASE("property: each proposal takes effect exactly once") {
    for (std::uint64_t seed = 7; seed < 17; ++seed) {
        test::Harness h(test::cast_genesis(test::default_cast()));
        test::Workload w(h, test::default_cast(), seed, 0.05);
        for (int i = 0; i < 300; ++i) w.step();
        const auto& s = h.state();
        CHECK(minted_by_submissions(s) == s.token.total_minted);

        std::size_t certified = 0;
        for (const auto& [id, b] : s.burns) certified += b.status == BurnStatus::Certified;
        CHECK(certified == s.certificates.size());

        std::set<RecordId> certified_burns;
        for (const auto& [id, c] : s.certificates) {
            CHECK(certified_burns.insert(c.burn_id).second);
            CHECK(c.tonnage == s.burns.at(c.burn_id).tonnage);
        }
        for (const auto& [id, p] : s.proposals) {
            bool executed = p.status == ProposalStatus::Executed;
            CHECK(executed == quorum::has_reached_quorum(p, s.quorum));
            CHECK(p.approvals.size() <= p.eligible_verifiers.size());
        }
    }
}
