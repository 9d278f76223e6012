#include "carbon/amm.hpp"

#include <numeric>
#include <string>

#include "carbon/arith.hpp"
#include "carbon/errors.hpp"
#include "carbon/token.hpp"

namespace carbon::amm {

namespace {

void require_balance(Quantity have, Quantity need) {
    if (have < need) fail(ErrorCode::InsufficientBalance, std::to_string(have) + " < " + std::to_string(need));
}

LiquidityPool& live_pool(WorldState& state) {
    if (!state.pool) fail(ErrorCode::NoPool);
    return *state.pool;
}

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::StableIn ? "StableIn" : "CarbonIn"; }

std::optional<Direction> direction_from_string(std::string_view s) {
    if (s == "StableIn") return Direction::StableIn;
    if (s == "CarbonIn") return Direction::CarbonIn;
    return std::nullopt;
}

Quantity swap_output(Quantity reserve_in, Quantity reserve_out, Quantity amount_in, std::uint64_t fee_numerator,
                     std::uint64_t fee_denominator) {
    u128 in_with_fee = checked_mul(u128{amount_in}, u128{fee_numerator});
    u128 numerator = checked_mul(in_with_fee, u128{reserve_out});
    u128 denominator = checked_add(checked_mul(u128{reserve_in}, u128{fee_denominator}), in_with_fee);
    if (denominator == 0) fail(ErrorCode::NoPool, "empty input reserve");
    return narrow_u64(numerator / denominator);
}

SwapQuote quote_swap(const LiquidityPool& pool, Direction direction, Quantity amount_in) {
    if (amount_in == 0) fail(ErrorCode::ZeroAmount);
    const bool stable_in = direction == Direction::StableIn;
    Quantity reserve_in = stable_in ? pool.stable_reserve : pool.carbon_reserve;
    Quantity reserve_out = stable_in ? pool.carbon_reserve : pool.stable_reserve;

    Quantity out = swap_output(reserve_in, reserve_out, amount_in, pool.fee_numerator, pool.fee_denominator);
    if (out == 0) fail(ErrorCode::DustOutput);

    SwapQuote q;
    q.direction = direction;
    q.amount_in = amount_in;
    q.amount_out = out;
    Quantity new_in = checked_add(reserve_in, amount_in);
    Quantity new_out = reserve_out - out;  // out < reserve_out whenever reserve_in > 0
    q.new_stable_reserve = stable_in ? new_in : new_out;
    q.new_carbon_reserve = stable_in ? new_out : new_in;
    return q;
}

Quantity create_pool(WorldState& state, const Address& creator, Quantity carbon_amount, Quantity stable_amount) {
    if (state.pool) fail(ErrorCode::PoolExists);
    if (carbon_amount == 0 || stable_amount == 0) fail(ErrorCode::ZeroAmount);
    require_balance(state.token.balance(creator), carbon_amount);
    require_balance(state.token.stable_balance(creator), stable_amount);

    Quantity shares = isqrt(u128{carbon_amount} * stable_amount);
    const Address pool_addr = pool_reserve_address();
    // A pool that was fully exited leaves no residual reserve balances.
    checked_add(state.token.balance(pool_addr), carbon_amount);
    checked_add(state.token.stable_balance(pool_addr), stable_amount);

    token::move_carbon(state.token, creator, pool_addr, carbon_amount);
    token::move_stable(state.token, creator, pool_addr, stable_amount);
    state.pool = LiquidityPool{carbon_amount, stable_amount, 997, 1000};
    state.lp_shares.shares[creator] = shares;
    state.lp_shares.total_shares = shares;
    return shares;
}

Quantity add_liquidity(WorldState& state, const Address& provider, Quantity carbon_in, Quantity stable_in) {
    auto& pool = live_pool(state);
    if (carbon_in == 0 || stable_in == 0) fail(ErrorCode::ZeroAmount);
    require_balance(state.token.balance(provider), carbon_in);
    require_balance(state.token.stable_balance(provider), stable_in);

    const u128 total = state.lp_shares.total_shares;
    u128 by_carbon = checked_mul(u128{carbon_in}, total) / pool.carbon_reserve;
    u128 by_stable = checked_mul(u128{stable_in}, total) / pool.stable_reserve;
    Quantity minted = narrow_u64(std::min(by_carbon, by_stable));
    if (minted == 0) fail(ErrorCode::ZeroShares);

    Quantity new_carbon = checked_add(pool.carbon_reserve, carbon_in);
    Quantity new_stable = checked_add(pool.stable_reserve, stable_in);
    Quantity new_total = checked_add(state.lp_shares.total_shares, minted);
    Quantity new_holding = checked_add(state.lp_shares.of(provider), minted);

    const Address pool_addr = pool_reserve_address();
    token::move_carbon(state.token, provider, pool_addr, carbon_in);
    token::move_stable(state.token, provider, pool_addr, stable_in);
    pool.carbon_reserve = new_carbon;
    pool.stable_reserve = new_stable;
    state.lp_shares.total_shares = new_total;
    state.lp_shares.shares[provider] = new_holding;
    return minted;
}

std::pair<Quantity, Quantity> remove_liquidity(WorldState& state, const Address& provider, Quantity shares) {
    auto& pool = live_pool(state);
    if (shares == 0) fail(ErrorCode::ZeroAmount);
    Quantity owned = state.lp_shares.of(provider);
    if (owned < shares) fail(ErrorCode::InsufficientShares, std::to_string(owned) + " < " + std::to_string(shares));

    const u128 total = state.lp_shares.total_shares;
    auto carbon_out = static_cast<Quantity>(u128{shares} * pool.carbon_reserve / total);
    auto stable_out = static_cast<Quantity>(u128{shares} * pool.stable_reserve / total);

    const Address pool_addr = pool_reserve_address();
    token::move_carbon(state.token, pool_addr, provider, carbon_out);
    token::move_stable(state.token, pool_addr, provider, stable_out);

    if (owned == shares)
        state.lp_shares.shares.erase(provider);
    else
        state.lp_shares.shares[provider] = owned - shares;
    state.lp_shares.total_shares -= shares;

    if (state.lp_shares.total_shares == 0) {
        state.pool.reset();
    } else {
        pool.carbon_reserve -= carbon_out;
        pool.stable_reserve -= stable_out;
    }
    return {carbon_out, stable_out};
}

Quantity swap_exact_in(WorldState& state, const Address& trader, Direction direction, Quantity amount_in,
                       Quantity min_out) {
    auto& pool = live_pool(state);
    if (amount_in == 0) fail(ErrorCode::ZeroAmount);
    const bool stable_in = direction == Direction::StableIn;
    require_balance(stable_in ? state.token.stable_balance(trader) : state.token.balance(trader), amount_in);

    SwapQuote q = quote_swap(pool, direction, amount_in);
    if (q.amount_out < min_out)
        fail(ErrorCode::SlippageExceeded, std::to_string(q.amount_out) + " < " + std::to_string(min_out));

    const Address pool_addr = pool_reserve_address();
    if (stable_in) {
        checked_add(state.token.balance(trader), q.amount_out);
        token::move_stable(state.token, trader, pool_addr, amount_in);
        token::move_carbon(state.token, pool_addr, trader, q.amount_out);
    } else {
        checked_add(state.token.stable_balance(trader), q.amount_out);
        token::move_carbon(state.token, trader, pool_addr, amount_in);
        token::move_stable(state.token, pool_addr, trader, q.amount_out);
    }
    pool.carbon_reserve = q.new_carbon_reserve;
    pool.stable_reserve = q.new_stable_reserve;
    return q.amount_out;
}

Rational spot_price(const WorldState& state) {
    if (!state.pool) fail(ErrorCode::NoPool);
    std::uint64_t num = state.pool->stable_reserve;
    std::uint64_t den = state.pool->carbon_reserve;
    std::uint64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

std::string to_decimal(const Rational& r, unsigned places) {
    u128 scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    u128 scaled = u128{r.numerator} * scale / r.denominator;
    auto whole = static_cast<std::uint64_t>(scaled / scale);
    auto frac = static_cast<std::uint64_t>(scaled % scale);
    std::string out = std::to_string(whole);
    if (places > 0) {
        std::string f = std::to_string(frac);
        out += '.';
        out.append(places - f.size(), '0');
        out += f;
    }
    return out;
}

}  // namespace carbon::amm
