#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carbon {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Quantities are unsigned base units. 1 token = 1 tCO2e = 1,000,000 units.
using Quantity = std::uint64_t;
inline constexpr Quantity kUnitsPerToken = 1'000'000;

std::string to_hex(ByteView bytes);

/// Decodes lowercase hex only; returns false on odd length, uppercase, or
/// any non-hex character.
bool from_hex(std::string_view text, Bytes& out);

/// Fixed 32-byte value. Tag keeps hashes and addresses from mixing.
template <typename Tag>
class Fixed32 {
public:
    static constexpr std::size_t kSize = 32;

    constexpr Fixed32() = default;
    explicit constexpr Fixed32(const std::array<std::uint8_t, kSize>& raw) : raw_(raw) {}

    /// Throws std::invalid_argument unless `bytes` is exactly 32 bytes.
    static Fixed32 from_bytes(ByteView bytes);
    /// Throws std::invalid_argument unless `text` is 64 lowercase hex chars.
    static Fixed32 from_hex(std::string_view text);

    [[nodiscard]] std::string hex() const { return to_hex(raw_); }
    [[nodiscard]] ByteView view() const { return raw_; }
    [[nodiscard]] const std::array<std::uint8_t, kSize>& raw() const { return raw_; }
    [[nodiscard]] std::array<std::uint8_t, kSize>& raw() { return raw_; }
    [[nodiscard]] bool is_zero() const {
        for (auto b : raw_)
            if (b != 0) return false;
        return true;
    }

    friend auto operator<=>(const Fixed32&, const Fixed32&) = default;

private:
    std::array<std::uint8_t, kSize> raw_{};
};

struct HashTag {};
struct AddressTag {};

using Hash32 = Fixed32<HashTag>;
using Address = Fixed32<AddressTag>;

/// All-zero address; balances sent here are unrecoverable.
inline constexpr Address kBurnSink{};

/// Account holding the AMM pool reserves. Never registrable.
Address pool_reserve_address();

/// True for addresses that no registration may claim.
bool is_reserved_address(const Address& a);

extern template class Fixed32<HashTag>;
extern template class Fixed32<AddressTag>;

}  // namespace carbon
