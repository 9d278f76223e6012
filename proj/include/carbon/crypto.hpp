#pragma once

#include <memory>
#include <string_view>

#include "carbon/bytes.hpp"

namespace carbon {

Hash32 sha256(ByteView data);
Hash32 sha256(std::string_view data);

/// Address = SHA-256(public key), untruncated.
Address derive_address(ByteView public_key);

struct KeyPair {
    Bytes public_key;
    Bytes secret_key;
};

/// Verification boundary. Implementations must be deterministic and
/// stateless so committed snapshots can be checked from any thread.
class SignatureScheme {
public:
    virtual ~SignatureScheme() = default;

    [[nodiscard]] virtual std::string_view name() const = 0;
    [[nodiscard]] virtual KeyPair keypair_from_seed(ByteView seed32) const = 0;
    [[nodiscard]] virtual Bytes sign(ByteView secret_key, const Hash32& digest) const = 0;
    [[nodiscard]] virtual bool verify(ByteView public_key, const Hash32& digest, ByteView signature) const = 0;
};

/// Ed25519 (RFC 8032) through OpenSSL. Signatures are deterministic.
class Ed25519Scheme final : public SignatureScheme {
public:
    [[nodiscard]] std::string_view name() const override { return "ed25519"; }
    [[nodiscard]] KeyPair keypair_from_seed(ByteView seed32) const override;
    [[nodiscard]] Bytes sign(ByteView secret_key, const Hash32& digest) const override;
    [[nodiscard]] bool verify(ByteView public_key, const Hash32& digest, ByteView signature) const override;
};

/// Test-only keyed-hash stand-in: signature = HMAC-SHA256(public_key, digest).
/// Anyone holding the public key can forge; never use outside tests.
class MockKeyedHashScheme final : public SignatureScheme {
public:
    [[nodiscard]] std::string_view name() const override { return "mock-hmac"; }
    [[nodiscard]] KeyPair keypair_from_seed(ByteView seed32) const override;
    [[nodiscard]] Bytes sign(ByteView secret_key, const Hash32& digest) const override;
    [[nodiscard]] bool verify(ByteView public_key, const Hash32& digest, ByteView signature) const override;
};

const SignatureScheme& ed25519_scheme();
const SignatureScheme& mock_scheme();

/// Looks a scheme up by name(); returns nullptr if unknown.
const SignatureScheme* scheme_by_name(std::string_view name);

/// 32 bytes from the OS CSPRNG.
Bytes random_seed();

}  // namespace carbon
