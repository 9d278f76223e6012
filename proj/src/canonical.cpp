#include "carbon/canonical.hpp"

#include <charconv>
#include <limits>

#include "carbon/errors.hpp"

namespace carbon {

namespace {

constexpr int kMaxDepth = 64;
constexpr char kHexDigits[] = "0123456789abcdef";

const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::Kind::Map: return "map";
        case Value::Kind::List: return "list";
        case Value::Kind::UInt: return "uint";
        case Value::Kind::Bool: return "bool";
        case Value::Kind::Text: return "text";
        case Value::Kind::Bytes: return "bytes";
    }
    return "?";
}

[[noreturn]] void kind_mismatch(Value::Kind want, Value::Kind got) {
    fail(ErrorCode::ParseError,
         std::string("expected ") + kind_name(want) + ", found " + kind_name(got));
}

void write_text(std::string& out, std::string_view s) {
    if (!is_valid_utf8(s)) fail(ErrorCode::UnsupportedValue, "text is not valid UTF-8");
    out.push_back('"');
    for (char ch : s) {
        auto c = static_cast<unsigned char>(ch);
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    out += "\\u00";
                    out.push_back(kHexDigits[c >> 4]);
                    out.push_back(kHexDigits[c & 0x0f]);
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
}

void write_value(std::string& out, const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Map: {
            out.push_back('{');
            bool first = true;
            for (const auto& [k, child] : v.as_map()) {
                if (!first) out.push_back(',');
                first = false;
                write_text(out, k);
                out.push_back(':');
                write_value(out, child);
            }
            out.push_back('}');
            break;
        }
        case Value::Kind::List: {
            out.push_back('[');
            bool first = true;
            for (const auto& child : v.as_list()) {
                if (!first) out.push_back(',');
                first = false;
                write_value(out, child);
            }
            out.push_back(']');
            break;
        }
        case Value::Kind::UInt: out += std::to_string(v.as_uint()); break;
        case Value::Kind::Bool: out += v.as_bool() ? "true" : "false"; break;
        case Value::Kind::Text: write_text(out, v.as_text()); break;
        case Value::Kind::Bytes:
            out += "0x";
            out += to_hex(v.as_bytes());
            break;
    }
}

class Parser {
public:
    explicit Parser(std::string_view in) : in_(in) {}

    Value parse_document() {
        Value v = parse_value(0);
        if (pos_ != in_.size()) error("trailing bytes");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_));
    }
    [[noreturn]] void unsupported(const std::string& what) const {
        fail(ErrorCode::UnsupportedValue, what + " at offset " + std::to_string(pos_));
    }

    [[nodiscard]] bool at_end() const { return pos_ >= in_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : in_[pos_]; }

    void expect(char c) {
        if (peek() != c) error(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume_literal(std::string_view lit) {
        if (in_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    Value parse_value(int depth) {
        if (depth > kMaxDepth) error("nesting too deep");
        if (at_end()) error("unexpected end of input");
        char c = peek();
        switch (c) {
            case '{': return parse_map(depth);
            case '[': return parse_list(depth);
            case '"': return Value::text(parse_string());
            case 't':
                if (consume_literal("true")) return Value::boolean(true);
                error("bad literal");
            case 'f':
                if (consume_literal("false")) return Value::boolean(false);
                error("bad literal");
            case 'n':
                if (consume_literal("null")) unsupported("null is not representable");
                error("bad literal");
            case '-': unsupported("negative numbers are not representable");
            default: break;
        }
        if (c >= '0' && c <= '9') return parse_number();
        error("unexpected character");
    }

    Value parse_map(int depth) {
        expect('{');
        Value::Map m;
        if (peek() == '}') {
            ++pos_;
            return Value::map(std::move(m));
        }
        const std::string* prev = nullptr;
        for (;;) {
            if (peek() != '"') error("expected map key");
            std::string key = parse_string();
            if (prev != nullptr && !(*prev < key)) error("map keys not strictly sorted");
            expect(':');
            Value child = parse_value(depth + 1);
            auto it = m.emplace_hint(m.end(), std::move(key), std::move(child));
            prev = &it->first;
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect('}');
            return Value::map(std::move(m));
        }
    }

    Value parse_list(int depth) {
        expect('[');
        Value::List l;
        if (peek() == ']') {
            ++pos_;
            return Value::list(std::move(l));
        }
        for (;;) {
            l.push_back(parse_value(depth + 1));
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return Value::list(std::move(l));
        }
    }

    Value parse_number() {
        std::size_t start = pos_;
        if (consume_literal("0x")) {
            std::size_t hex_start = pos_;
            while (!at_end() && ((peek() >= '0' && peek() <= '9') || (peek() >= 'a' && peek() <= 'f')))
                ++pos_;
            Bytes b;
            if (!from_hex(in_.substr(hex_start, pos_ - hex_start), b)) error("odd-length byte array");
            if (!at_end() && ((peek() >= 'A' && peek() <= 'F') || (peek() >= 'g' && peek() <= 'z')))
                error("byte arrays are lowercase hex");
            return Value::bytes(std::move(b));
        }
        while (!at_end() && peek() >= '0' && peek() <= '9') ++pos_;
        if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
            unsupported("floating point is not representable");
        std::string_view digits = in_.substr(start, pos_ - start);
        if (digits.size() > 1 && digits[0] == '0') error("leading zero");
        std::uint64_t n = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || p != digits.data() + digits.size()) error("integer out of range");
        return Value::uint(n);
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        for (;;) {
            if (at_end()) error("unterminated string");
            auto c = static_cast<unsigned char>(in_[pos_]);
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c < 0x20) error("raw control character in string");
            if (c != '\\') {
                out.push_back(static_cast<char>(c));
                ++pos_;
                continue;
            }
            ++pos_;
            if (at_end()) error("unterminated escape");
            char e = in_[pos_++];
            switch (e) {
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                case 'b': out.push_back('\b'); break;
                case 'f': out.push_back('\f'); break;
                case 'n': out.push_back('\n'); break;
                case 'r': out.push_back('\r'); break;
                case 't': out.push_back('\t'); break;
                case 'u': {
                    // Only the \u00XX form for control characters without a
                    // short escape is canonical.
                    if (in_.substr(pos_, 2) != "00") error("non-canonical \\u escape");
                    Bytes b;
                    if (!from_hex(in_.substr(pos_ + 2, 2), b)) error("bad \\u escape");
                    pos_ += 4;
                    unsigned char cc = b[0];
                    if (cc >= 0x20 || cc == '\b' || cc == '\f' || cc == '\n' || cc == '\r' || cc == '\t')
                        error("non-canonical \\u escape");
                    out.push_back(static_cast<char>(cc));
                    break;
                }
                default: error("unknown escape");
            }
        }
        if (!is_valid_utf8(out)) error("text is not valid UTF-8");
        return out;
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

}  // namespace

const Value::Map& Value::as_map() const {
    if (auto* p = std::get_if<Map>(&data_)) return *p;
    kind_mismatch(Kind::Map, kind());
}
Value::Map& Value::as_map() {
    if (auto* p = std::get_if<Map>(&data_)) return *p;
    kind_mismatch(Kind::Map, kind());
}
const Value::List& Value::as_list() const {
    if (auto* p = std::get_if<List>(&data_)) return *p;
    kind_mismatch(Kind::List, kind());
}
Value::List& Value::as_list() {
    if (auto* p = std::get_if<List>(&data_)) return *p;
    kind_mismatch(Kind::List, kind());
}
std::uint64_t Value::as_uint() const {
    if (auto* p = std::get_if<std::uint64_t>(&data_)) return *p;
    kind_mismatch(Kind::UInt, kind());
}
bool Value::as_bool() const {
    if (auto* p = std::get_if<bool>(&data_)) return *p;
    kind_mismatch(Kind::Bool, kind());
}
const std::string& Value::as_text() const {
    if (auto* p = std::get_if<std::string>(&data_)) return *p;
    kind_mismatch(Kind::Text, kind());
}
const Bytes& Value::as_bytes() const {
    if (auto* p = std::get_if<Bytes>(&data_)) return *p;
    kind_mismatch(Kind::Bytes, kind());
}

const Value& Value::at(const std::string& key) const {
    const auto& m = as_map();
    auto it = m.find(key);
    if (it == m.end()) fail(ErrorCode::ParseError, "missing field '" + key + "'");
    return it->second;
}

Value& Value::set(std::string key, Value v) {
    as_map().insert_or_assign(std::move(key), std::move(v));
    return *this;
}

std::string canonical_serialize(const Value& value) {
    std::string out;
    write_value(out, value);
    return out;
}

Value canonical_parse(std::string_view text) {
    return Parser(text).parse_document();
}

bool is_valid_utf8(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        std::uint32_t cp;
        if ((c & 0xe0) == 0xc0) {
            len = 2;
            cp = c & 0x1f;
        } else if ((c & 0xf0) == 0xe0) {
            len = 3;
            cp = c & 0x0f;
        } else if ((c & 0xf8) == 0xf0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            auto cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xc0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3f);
        }
        // overlong forms, surrogates, out of range
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000)) return false;
        if (cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return false;
        i += len;
    }
    return true;
}

}  // namespace carbon
