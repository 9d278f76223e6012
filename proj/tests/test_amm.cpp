#include <doctest.h>

#include <functional>

#include <random>

#include "carbon/amm.hpp"
#include "carbon/codec.hpp"
#include "carbon/registry.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace carbon;
using test::error_of;

namespace {

struct Market {
    WorldState s;
    Address lp = test::address_of("lp");
    Address trader = test::address_of("trader");

    Market() : s(storage::build_genesis(test::make_genesis(1))) {
        registry::register_account(s, Role::Customer, test::key_for("lp").public_key, "lp", 1);
        registry::register_account(s, Role::Customer, test::key_for("trader").public_key, "trader", 1);
        give(lp, 1'000'000'000'000, 1'000'000'000'000);
        give(trader, 1'000'000'000'000, 1'000'000'000'000);
    }

    // Fixture funding straight into the ledger, keeping the totals consistent.
    void give(const Address& a, Quantity carbon, Quantity stable) {
        s.token.balances[a] += carbon;
        s.token.total_minted += carbon;
        s.token.stable_balances[a] += stable;
        s.token.stable_total += stable;
    }

    void expect_rejected(ErrorCode code, const std::function<void()>& fn) {
        Value before = codec::encode(s);
        CHECK(error_of(fn) == code);
        CHECK(codec::encode(s) == before);
    }
};

}  // namespace

TEST_CASE("amm: documented swap vectors") {
    CHECK(amm::swap_output(1'000'000, 1'000'000, 100'000) == 90'661);
    CHECK(amm::swap_output(1000, 1000, 1000) == 499);
    CHECK(oracle::swap_out(1'000'000, 1'000'000, 100'000) == 90'661);
    CHECK(oracle::swap_out_search(1000, 1000, 1000) == 499);
}

TEST_CASE("amm: create pool takes the geometric mean") {
    Market m;
    CHECK(amm::create_pool(m.s, m.lp, 4'000'000, 1'000'000) == 2'000'000);
    CHECK(m.s.token.balance(pool_reserve_address()) == 4'000'000);
    CHECK(m.s.token.stable_balance(pool_reserve_address()) == 1'000'000);
    m.expect_rejected(ErrorCode::PoolExists, [&] { amm::create_pool(m.s, m.lp, 1, 1); });
}

TEST_CASE("amm: add liquidity min rule") {
    Market m;
    amm::create_pool(m.s, m.lp, 1000, 1000);
    CHECK(amm::add_liquidity(m.s, m.trader, 100, 100) == 100);

    Market m2;
    CHECK(amm::create_pool(m2.s, m2.lp, 1000, 2000) == 1414);
    CHECK(amm::add_liquidity(m2.s, m2.trader, 100, 300) == 141);
    CHECK(oracle::add_shares(1000, 2000, 1414, 100, 300) == 141);
    // The off-ratio excess stays in the pool.
    CHECK(m2.s.pool->stable_reserve == 2300);

    m2.expect_rejected(ErrorCode::ZeroShares, [&] { amm::add_liquidity(m2.s, m2.trader, 1, 1); });
    m2.expect_rejected(ErrorCode::ZeroAmount, [&] { amm::add_liquidity(m2.s, m2.trader, 0, 100); });
}

TEST_CASE("amm: remove liquidity") {
    Market m;
    amm::create_pool(m.s, m.lp, 1000, 1000);
    // Accrue 100 of each asset into the reserves without minting shares.
    m.give(pool_reserve_address(), 100, 100);
    m.s.pool->carbon_reserve += 100;
    m.s.pool->stable_reserve += 100;
    CHECK(m.s.lp_shares.total_shares == 1000);
    auto [c, s] = amm::remove_liquidity(m.s, m.lp, 100);
    CHECK(c == 110);
    CHECK(s == 110);

    m.expect_rejected(ErrorCode::InsufficientShares, [&] { amm::remove_liquidity(m.s, m.trader, 1); });
    m.expect_rejected(ErrorCode::InsufficientShares, [&] { amm::remove_liquidity(m.s, m.lp, 901); });

    Quantity all = m.s.lp_shares.of(m.lp);
    auto before_c = m.s.token.balance(m.lp);
    auto [c2, s2] = amm::remove_liquidity(m.s, m.lp, all);
    CHECK(c2 == 990);
    CHECK(s2 == 990);
    CHECK_FALSE(m.s.pool.has_value());
    CHECK(m.s.token.balance(pool_reserve_address()) == 0);
    CHECK(m.s.token.balance(m.lp) == before_c + 990);
    m.expect_rejected(ErrorCode::NoPool, [&] { amm::remove_liquidity(m.s, m.lp, 1); });
}

TEST_CASE("amm: swap, slippage, dust, and spot price") {
    Market m;
    amm::create_pool(m.s, m.lp, 1'000'000, 1'000'000);
    m.expect_rejected(ErrorCode::SlippageExceeded,
                      [&] { amm::swap_exact_in(m.s, m.trader, amm::Direction::StableIn, 100'000, 90'662); });
    m.expect_rejected(ErrorCode::DustOutput,
                      [&] { amm::swap_exact_in(m.s, m.trader, amm::Direction::StableIn, 1, 0); });
    m.expect_rejected(ErrorCode::ZeroAmount,
                      [&] { amm::swap_exact_in(m.s, m.trader, amm::Direction::CarbonIn, 0, 0); });

    CHECK(amm::swap_exact_in(m.s, m.trader, amm::Direction::StableIn, 100'000, 90'000) == 90'661);
    CHECK(m.s.pool->carbon_reserve == 909'339);
    CHECK(m.s.pool->stable_reserve == 1'100'000);

    auto p = amm::spot_price(m.s);
    CHECK(p.numerator == 1'100'000);
    CHECK(p.denominator == 909'339);
    CHECK(amm::to_decimal(p, 6) == "1.209669");
    CHECK(amm::to_decimal({1, 3}, 6) == "0.333333");
}

TEST_CASE("amm: insufficient balance and overflow") {
    Market m;
    Address poor = test::address_of("poor");
    registry::register_account(m.s, Role::Customer, test::key_for("poor").public_key, "poor", 1);
    m.expect_rejected(ErrorCode::InsufficientBalance, [&] { amm::create_pool(m.s, poor, 1, 1); });
    amm::create_pool(m.s, m.lp, 1'000, 1'000);
    m.expect_rejected(ErrorCode::InsufficientBalance,
                      [&] { amm::swap_exact_in(m.s, poor, amm::Direction::StableIn, 10, 0); });
    CHECK(error_of([] { (void)amm::swap_output(1, UINT64_MAX, UINT64_MAX, 997, 1000); }) == ErrorCode::Overflow);
}

TEST_CASE("amm: closed form equals invariant search on random inputs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3000; ++i) {
        auto rin = test::uniform(rng, 1, 1ull << (rng() % 50 + 1));
        auto rout = test::uniform(rng, 1, 1ull << (rng() % 50 + 1));
        auto in = test::uniform(rng, 1, 1ull << (rng() % 50 + 1));
        auto got = amm::swap_output(rin, rout, in);
        REQUIRE(oracle::cpp_int(got) == oracle::swap_out_search(rin, rout, in));
    }
}
