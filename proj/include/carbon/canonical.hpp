#pragma once

// Canonical value encoding. This is both the wire format and the hash
// preimage format, so every value has exactly one byte representation:
//
//   map    {"k":v,...}  keys sorted by UTF-8 byte order, no duplicates
//   list   [v,...]
//   uint   decimal, no sign, no leading zeros, fits in 64 bits
//   bool   true | false
//   text   "..." JSON string escaping, shortest form, raw UTF-8 otherwise
//   bytes  0x followed by lowercase hex (0x alone for the empty array)
//
// No whitespace anywhere. Floats and null are not representable.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "carbon/bytes.hpp"

namespace carbon {

class Value {
public:
    using Map = std::map<std::string, Value>;
    using List = std::vector<Value>;

    enum class Kind : std::uint8_t { Map, List, UInt, Bool, Text, Bytes };

    Value() : data_(Map{}) {}

    static Value map() { return Value(Map{}); }
    static Value map(Map m) { return Value(std::move(m)); }
    static Value list(List l = {}) { return Value(std::move(l)); }
    static Value uint(std::uint64_t n) { return Value(n); }
    static Value boolean(bool b) { return Value(b); }
    static Value text(std::string s) { return Value(std::move(s)); }
    static Value bytes(Bytes b) { return Value(std::move(b)); }
    static Value bytes(ByteView b) { return Value(Bytes(b.begin(), b.end())); }

    [[nodiscard]] Kind kind() const { return static_cast<Kind>(data_.index()); }

    // Accessors throw LedgerError(ParseError) on kind mismatch.
    [[nodiscard]] const Map& as_map() const;
    [[nodiscard]] Map& as_map();
    [[nodiscard]] const List& as_list() const;
    [[nodiscard]] List& as_list();
    [[nodiscard]] std::uint64_t as_uint() const;
    [[nodiscard]] bool as_bool() const;
    [[nodiscard]] const std::string& as_text() const;
    [[nodiscard]] const Bytes& as_bytes() const;

    /// Map member lookup; throws ParseError if absent.
    [[nodiscard]] const Value& at(const std::string& key) const;

    /// Insert or overwrite a map member. Returns *this for chaining.
    Value& set(std::string key, Value v);

    friend bool operator==(const Value&, const Value&) = default;

private:
    template <typename T>
    explicit Value(T&& v) : data_(std::forward<T>(v)) {}

    std::variant<Map, List, std::uint64_t, bool, std::string, Bytes> data_;
};

/// Throws LedgerError(UnsupportedValue) if any text is not valid UTF-8.
std::string canonical_serialize(const Value& value);

/// Strict inverse of canonical_serialize: rejects any input that is not the
/// exact canonical form. Throws LedgerError(UnsupportedValue) on floats,
/// negative numbers, or null; LedgerError(ParseError) otherwise.
Value canonical_parse(std::string_view text);

bool is_valid_utf8(std::string_view text);

}  // namespace carbon
