#include "carbon/bytes.hpp"

#include <algorithm>
#include <stdexcept>

namespace carbon {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::string to_hex(ByteView bytes) {
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

bool from_hex(std::string_view text, Bytes& out) {
    if (text.size() % 2 != 0) return false;
    Bytes result;
    result.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        int hi = hex_value(text[i]);
        int lo = hex_value(text[i + 1]);
        if (hi < 0 || lo < 0) return false;
        result.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    out = std::move(result);
    return true;
}

template <typename Tag>
Fixed32<Tag> Fixed32<Tag>::from_bytes(ByteView bytes) {
    if (bytes.size() != kSize) throw std::invalid_argument("expected 32 bytes");
    Fixed32 v;
    std::copy(bytes.begin(), bytes.end(), v.raw_.begin());
    return v;
}

template <typename Tag>
Fixed32<Tag> Fixed32<Tag>::from_hex(std::string_view text) {
    Bytes raw;
    if (text.size() != kSize * 2 || !carbon::from_hex(text, raw))
        throw std::invalid_argument("expected 64 lowercase hex characters");
    return from_bytes(raw);
}

template class Fixed32<HashTag>;
template class Fixed32<AddressTag>;

Address pool_reserve_address() {
    std::array<std::uint8_t, 32> raw{};
    raw[31] = 0x01;
    return Address{raw};
}

bool is_reserved_address(const Address& a) {
    return a == kBurnSink || a == pool_reserve_address();
}

}  // namespace carbon
