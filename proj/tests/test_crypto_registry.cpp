#include <doctest.h>

#include "carbon/codec.hpp"
#include "carbon/crypto.hpp"
#include "carbon/registry.hpp"
#include "support.hpp"

using namespace carbon;
using carbon::test::key_for;

TEST_CASE("sha256 known vectors") {
    CHECK(sha256(std::string_view{}).hex() == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256(std::string_view{"abc"}).hex() ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("ed25519 RFC 8032 test 1") {
    Bytes seed;
    REQUIRE(from_hex("9d61b19deffd5a60ba844af492ec2cc44449c5697b326919703bac031cae7f60", seed));
    auto kp = ed25519_scheme().keypair_from_seed(seed);
    CHECK(to_hex(kp.public_key) == "d75a980182b10ab7d54bfed3c964073a0ee172f3daa62325af021a68f707511a");
}

TEST_CASE("signature schemes: sign/verify and tamper") {
    for (const SignatureScheme* s : {&ed25519_scheme(), &mock_scheme()}) {
        CAPTURE(s->name());
        auto kp = key_for("alice", *s);
        auto digest = sha256(std::string_view{"payload"});
        auto sig = s->sign(kp.secret_key, digest);
        CHECK(s->verify(kp.public_key, digest, sig));
        CHECK_FALSE(s->verify(kp.public_key, sha256(std::string_view{"payloaD"}), sig));
        sig[0] ^= 1;
        CHECK_FALSE(s->verify(kp.public_key, digest, sig));
        CHECK(scheme_by_name(s->name()) == s);
    }
    CHECK(scheme_by_name("rsa") == nullptr);
}

TEST_CASE("registry: registration and addresses") {
    WorldState s = storage::build_genesis(test::make_genesis(1));
    auto pk = key_for("farm").public_key;
    auto rec = registry::register_account(s, Role::CreditHolder, pk, "Farm B", 3);
    CHECK(rec.id == derive_address(pk));
    CHECK(rec.id.raw() == sha256(ByteView(pk)).raw());
    CHECK(rec.registered_at == 3);
    CHECK_FALSE(rec.accredited);
    CHECK(registry::lookup(s, rec.id).display_name == "Farm B");

    SUBCASE("duplicate") {
        CHECK(test::error_of([&] { registry::register_account(s, Role::Customer, pk, "again", 4); }) ==
              ErrorCode::DuplicateAccount);
    }
    SUBCASE("name length boundary") {
        auto pk2 = key_for("long").public_key;
        CHECK_THROWS_AS(registry::register_account(s, Role::Customer, pk2, std::string(129, 'x'), 1), LedgerError);
        CHECK(registry::register_account(s, Role::Customer, pk2, std::string(128, 'x'), 1).display_name.size() ==
              128);
    }
    SUBCASE("admin role is genesis-only") {
        try {
            registry::register_account(s, Role::Admin, key_for("x").public_key, "", 1);
            FAIL("expected Unauthorized");
        } catch (const LedgerError& e) {
            CHECK(e.code() == ErrorCode::Unauthorized);
        }
    }
    SUBCASE("burn sink has no record") {
        try {
            (void)registry::lookup(s, kBurnSink);
            FAIL("expected UnknownAccount");
        } catch (const LedgerError& e) {
            CHECK(e.code() == ErrorCode::UnknownAccount);
        }
    }
}

TEST_CASE("registry: accreditation") {
    WorldState s = storage::build_genesis(test::make_genesis(2));
    Address admin = test::address_of("admin");
    auto vpk = key_for("new-verifier").public_key;
    auto v = registry::register_account(s, Role::Verifier, vpk, "nv", 1);
    CHECK(registry::accredited_verifiers(s).size() == 2);

    auto updated = registry::set_verifier_accreditation(s, admin, v.id, true);
    CHECK(updated.accredited);
    CHECK(registry::accredited_verifiers(s).size() == 3);

    auto expect = [&](ErrorCode code, auto&& fn) {
        WorldState before = s;
        try {
            fn();
            FAIL("expected " << to_string(code));
        } catch (const LedgerError& e) {
            CHECK(e.code() == code);
        }
        CHECK(codec::encode(s) == codec::encode(before));
    };
    expect(ErrorCode::Unauthorized, [&] { registry::set_verifier_accreditation(s, v.id, v.id, false); });
    expect(ErrorCode::UnknownAccount,
           [&] { registry::set_verifier_accreditation(s, admin, test::address_of("nobody"), true); });
    auto cpk = key_for("cust").public_key;
    auto c = registry::register_account(s, Role::Customer, cpk, "c", 1);
    expect(ErrorCode::RoleMismatch, [&] { registry::set_verifier_accreditation(s, admin, c.id, true); });

    registry::set_verifier_accreditation(s, admin, v.id, false);
    CHECK(registry::accredited_verifiers(s).size() == 2);
}

TEST_CASE("registry: reserved addresses") {
    CHECK(is_reserved_address(kBurnSink));
    CHECK(is_reserved_address(pool_reserve_address()));
    CHECK_FALSE(is_reserved_address(test::address_of("alice")));
}
