#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "carbon/state.hpp"

/// Constant-product market maker for carbon against the stable asset.
///
/// The pool's reserves are held as ordinary balances of
/// pool_reserve_address() in the token ledger, so conservation sums cover
/// them with no special casing. The fee is taken on the input side:
///
///     out = reserve_out * in * 997 / (reserve_in * 1000 + in * 997)
///
/// with floor division and 128-bit intermediates. Anything that would not fit
/// raises Overflow.
namespace carbon::amm {

enum class Direction : std::uint8_t { StableIn, CarbonIn };

std::string_view to_string(Direction d);
std::optional<Direction> direction_from_string(std::string_view s);

struct SwapQuote {
    Direction direction = Direction::StableIn;
    Quantity amount_in = 0;
    Quantity amount_out = 0;
    Quantity new_carbon_reserve = 0;
    Quantity new_stable_reserve = 0;
};

/// Exact rational, always reduced; denominator > 0.
struct Rational {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Pure output formula. Returns 0 when the trade is too small.
Quantity swap_output(Quantity reserve_in, Quantity reserve_out, Quantity amount_in, std::uint64_t fee_numerator = 997,
                     std::uint64_t fee_denominator = 1000);

/// Dry run against a pool value. Throws ZeroAmount, DustOutput, Overflow.
SwapQuote quote_swap(const LiquidityPool& pool, Direction direction, Quantity amount_in);

/// Returns minted shares = isqrt(carbon * stable).
/// Throws PoolExists, ZeroAmount, InsufficientBalance.
Quantity create_pool(WorldState& state, const Address& creator, Quantity carbon_amount, Quantity stable_amount);

/// Min-rule share minting; the off-ratio excess stays in the pool.
/// Throws NoPool, ZeroAmount, InsufficientBalance, ZeroShares, Overflow.
Quantity add_liquidity(WorldState& state, const Address& provider, Quantity carbon_in, Quantity stable_in);

/// Returns (carbon_out, stable_out). Redeeming the last share deletes the
/// pool. Throws NoPool, ZeroAmount, InsufficientShares.
std::pair<Quantity, Quantity> remove_liquidity(WorldState& state, const Address& provider, Quantity shares);

/// Throws NoPool, ZeroAmount, InsufficientBalance, DustOutput,
/// SlippageExceeded, Overflow.
Quantity swap_exact_in(WorldState& state, const Address& trader, Direction direction, Quantity amount_in,
                       Quantity min_out);

/// stable_reserve / carbon_reserve. Throws NoPool.
Rational spot_price(const WorldState& state);

/// Display-only rendering with exactly `places` decimals, truncated.
std::string to_decimal(const Rational& r, unsigned places = 6);

}  // namespace carbon::amm
