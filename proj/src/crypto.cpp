#include "carbon/crypto.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>

#include <stdexcept>

namespace carbon {

namespace {

struct PkeyDeleter {
    void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
struct MdCtxDeleter {
    void operator()(EVP_MD_CTX* p) const { EVP_MD_CTX_free(p); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

constexpr std::size_t kEd25519KeySize = 32;
constexpr std::size_t kEd25519SigSize = 64;

}  // namespace

Hash32 sha256(ByteView data) {
    std::array<std::uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32)
        throw std::runtime_error("SHA-256 failed");
    return Hash32{out};
}

Hash32 sha256(std::string_view data) {
    return sha256(ByteView(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

Address derive_address(ByteView public_key) {
    return Address{sha256(public_key).raw()};
}

KeyPair Ed25519Scheme::keypair_from_seed(ByteView seed32) const {
    if (seed32.size() != kEd25519KeySize) throw std::invalid_argument("ed25519 seed must be 32 bytes");
    PkeyPtr key(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, seed32.data(), seed32.size()));
    if (!key) throw std::runtime_error("ed25519 key construction failed");
    KeyPair kp;
    kp.secret_key.assign(seed32.begin(), seed32.end());
    kp.public_key.resize(kEd25519KeySize);
    std::size_t len = kp.public_key.size();
    if (EVP_PKEY_get_raw_public_key(key.get(), kp.public_key.data(), &len) != 1 || len != kEd25519KeySize)
        throw std::runtime_error("ed25519 public key extraction failed");
    return kp;
}

Bytes Ed25519Scheme::sign(ByteView secret_key, const Hash32& digest) const {
    PkeyPtr key(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, secret_key.data(), secret_key.size()));
    if (!key) throw std::invalid_argument("bad ed25519 secret key");
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1)
        throw std::runtime_error("ed25519 sign init failed");
    Bytes sig(kEd25519SigSize);
    std::size_t len = sig.size();
    if (EVP_DigestSign(ctx.get(), sig.data(), &len, digest.view().data(), digest.view().size()) != 1)
        throw std::runtime_error("ed25519 sign failed");
    sig.resize(len);
    return sig;
}

bool Ed25519Scheme::verify(ByteView public_key, const Hash32& digest, ByteView signature) const {
    if (public_key.size() != kEd25519KeySize || signature.size() != kEd25519SigSize) return false;
    PkeyPtr key(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, public_key.data(), public_key.size()));
    if (!key) return false;
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1) return false;
    return EVP_DigestVerify(ctx.get(), signature.data(), signature.size(), digest.view().data(),
                            digest.view().size()) == 1;
}

namespace {

Bytes hmac_sha256(ByteView key, ByteView data) {
    Bytes out(32);
    unsigned int len = 0;
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(), out.data(),
             &len) == nullptr)
        throw std::runtime_error("HMAC failed");
    out.resize(len);
    return out;
}

}  // namespace

KeyPair MockKeyedHashScheme::keypair_from_seed(ByteView seed32) const {
    KeyPair kp;
    kp.secret_key.assign(seed32.begin(), seed32.end());
    Bytes preimage{'m', 'o', 'c', 'k', '-', 'p', 'k'};
    preimage.insert(preimage.end(), seed32.begin(), seed32.end());
    auto h = sha256(preimage);
    kp.public_key.assign(h.view().begin(), h.view().end());
    return kp;
}

Bytes MockKeyedHashScheme::sign(ByteView secret_key, const Hash32& digest) const {
    auto kp = keypair_from_seed(secret_key);
    return hmac_sha256(kp.public_key, digest.view());
}

bool MockKeyedHashScheme::verify(ByteView public_key, const Hash32& digest, ByteView signature) const {
    auto expected = hmac_sha256(public_key, digest.view());
    return signature.size() == expected.size() && std::equal(expected.begin(), expected.end(), signature.begin());
}

const SignatureScheme& ed25519_scheme() {
    static const Ed25519Scheme scheme;
    return scheme;
}

const SignatureScheme& mock_scheme() {
    static const MockKeyedHashScheme scheme;
    return scheme;
}

const SignatureScheme* scheme_by_name(std::string_view name) {
    if (name == ed25519_scheme().name()) return &ed25519_scheme();
    if (name == mock_scheme().name()) return &mock_scheme();
    return nullptr;
}

Bytes random_seed() {
    Bytes seed(32);
    if (RAND_bytes(seed.data(), static_cast<int>(seed.size())) != 1) throw std::runtime_error("RAND_bytes failed");
    return seed;
}

}  // namespace carbon
