#include <doctest.h>

#include <algorithm>
#include <random>

#include "carbon/canonical.hpp"
#include "carbon/crypto.hpp"
#include "carbon/errors.hpp"

using namespace carbon;

namespace {

ErrorCode parse_error_of(std::string_view text) {
    try {
        (void)canonical_parse(text);
    } catch (const LedgerError& e) {
        return e.code();
    }
    FAIL("parse unexpectedly succeeded: " << text);
    return ErrorCode::ParseError;
}

std::string random_text(std::mt19937_64& rng) {
    static const std::vector<std::string> pieces = {"a", "Z", "0", " ", "\"", "\\", "\n", "\t", "\x01", "\x7f",
                                                    "\xc3\xa9", "\xe2\x82\xac", "\xf0\x9f\x8c\xb2", "{", ":"};
    std::string s;
    auto n = rng() % 8;
    for (std::size_t i = 0; i < n; ++i) s += pieces[rng() % pieces.size()];
    return s;
}

Value random_value(std::mt19937_64& rng, int depth) {
    int pick = static_cast<int>(rng() % (depth > 3 ? 4 : 6));
    switch (pick) {
        case 0: {
            int width = static_cast<int>(rng() % 64);
            return Value::uint(width == 0 ? 0 : rng() >> (63 - width % 63));
        }
        case 1:
            return Value::boolean(rng() & 1);
        case 2:
            return Value::text(random_text(rng));
        case 3: {
            Bytes b(rng() % 6);
            for (auto& x : b) x = static_cast<std::uint8_t>(rng());
            return Value::bytes(b);
        }
        case 4: {
            Value::List l;
            for (auto n = rng() % 4; n > 0; --n) l.push_back(random_value(rng, depth + 1));
            return Value::list(std::move(l));
        }
        default: {
            Value m = Value::map();
            for (auto n = rng() % 4; n > 0; --n) m.set(random_text(rng), random_value(rng, depth + 1));
            return m;
        }
    }
}

}  // namespace

TEST_CASE("canonical: documented forms") {
    CHECK(canonical_serialize(Value::map()) == "{}");

    Value m = Value::map().set("b", Value::uint(2)).set("a", Value::uint(1));
    CHECK(canonical_serialize(m) == R"({"a":1,"b":2})");

    Value with_bytes = Value::map().set("k", Value::bytes(Bytes{0xbe, 0xef}));
    CHECK(canonical_serialize(with_bytes).find("0xbeef") != std::string::npos);

    CHECK(canonical_serialize(Value::list({Value::boolean(true), Value::text("x\ny")})) == R"([true,"x\ny"])");
    CHECK(canonical_serialize(Value::uint(UINT64_MAX)) == "18446744073709551615");
    CHECK(canonical_serialize(Value::bytes(Bytes{})) == "0x");
}

TEST_CASE("canonical: bytes and text never collide") {
    Value a = Value::text("0xbeef");
    Value b = Value::bytes(Bytes{0xbe, 0xef});
    CHECK(canonical_serialize(a) != canonical_serialize(b));
}

TEST_CASE("canonical: unsupported values") {
    CHECK(parse_error_of("null") == ErrorCode::UnsupportedValue);
    CHECK(parse_error_of("1.5") == ErrorCode::UnsupportedValue);
    CHECK(parse_error_of("-3") == ErrorCode::UnsupportedValue);
    CHECK(parse_error_of("1e3") == ErrorCode::UnsupportedValue);
    CHECK_THROWS_AS((void)canonical_serialize(Value::text("\xff")), LedgerError);
}

TEST_CASE("canonical: non-canonical input is rejected") {
    for (const char* bad : {"{ }", R"({"b":1,"a":2})", R"({"a":1,"a":1})", "01", "18446744073709551616",
                            "0xBEEF", "0xabc", R"("\u0041")", R"("\/")", "[1,]", "{}x", "tru", R"("a)"}) {
        CAPTURE(bad);
        CHECK(parse_error_of(bad) == ErrorCode::ParseError);
    }
}

TEST_CASE("canonical: nesting limit") {
    std::string deep(100, '[');
    deep += std::string(100, ']');
    CHECK(parse_error_of(deep) == ErrorCode::ParseError);
}

TEST_CASE("canonical: parse(serialize(v)) == v for generated values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        Value v = random_value(rng, 0);
        std::string text = canonical_serialize(v);
        Value back = canonical_parse(text);
        REQUIRE(back == v);
        // Serialization is a function of the value, so equal values hash equal.
        CHECK(sha256(canonical_serialize(back)) == sha256(text));
    }
}

TEST_CASE("canonical: key order is byte order, not insertion order") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::pair<std::string, std::uint64_t>> entries;
        for (int k = 0; k < 6; ++k) entries.emplace_back(random_text(rng), rng());
        Value a = Value::map();
        for (const auto& [k, v] : entries) a.set(k, Value::uint(v));
        std::vector<std::pair<std::string, Value>> unique(a.as_map().begin(), a.as_map().end());
        std::shuffle(unique.begin(), unique.end(), rng);
        Value b = Value::map();
        for (const auto& [k, v] : unique) b.set(k, v);
        std::string text = canonical_serialize(b);
        CHECK(text == canonical_serialize(a));
    }
}
