#include <doctest.h>

#include "carbon/codec.hpp"
#include "support.hpp"

using namespace carbon;
using test::Harness;

namespace {

Harness scenario_harness() {
    Harness h(test::make_genesis(5, {{"A", Role::Customer, 5'000'000}}));
    REQUIRE(h.register_as("B", Role::CreditHolder).accepted());
    return h;
}

}  // namespace

TEST_CASE("ledger: signature and nonce discipline") {
    Harness h = scenario_harness();
    auto tx = h.sign("B", payload::SubmitCredit{"forest", sha256(std::string_view{"e"}), 10});

    SUBCASE("altered payload") {
        auto bad = tx;
        std::get<payload::SubmitCredit>(bad.payload).tonnage = 11;
        Value before = codec::encode(h.state());
        auto r = h.ledger().submit(bad);
        CHECK(r.rejection == ErrorCode::BadSignature);
        CHECK(codec::encode(h.state()) == before);
    }
    SUBCASE("future nonce") {
        auto keys = test::key_for("B");
        auto future = sign_transaction(mock_scheme(), keys, 5, tx.payload);
        auto r = h.ledger().submit(future);
        CHECK(r.rejection == ErrorCode::BadNonce);
        CHECK(h.state().nonce_of(h.addr("B")) == 1);
    }
    SUBCASE("replayed transaction") {
        CHECK(h.ledger().submit(tx).accepted());
        CHECK(h.ledger().submit(tx).rejection == ErrorCode::BadNonce);
    }
    SUBCASE("rejection keeps the nonce") {
        auto r = h.send("B", payload::Transfer{h.addr("A"), 1});
        CHECK(r.rejection == ErrorCode::InsufficientBalance);
        CHECK(h.state().nonce_of(h.addr("B")) == 1);
        CHECK(h.ledger().submit(tx).accepted());
        CHECK(h.state().nonce_of(h.addr("B")) == 2);
    }
    SUBCASE("unknown sender") {
        CHECK(h.send("ghost", payload::Burn{1}).rejection == ErrorCode::UnknownSender);
    }
    SUBCASE("registration must be self-signed") {
        auto keys = test::key_for("C");
        auto other = test::key_for("D");
        auto forged = sign_transaction(mock_scheme(), keys, 0, payload::Register{Role::Customer, other.public_key, ""});
        CHECK(h.ledger().submit(forged).rejection == ErrorCode::BadSignature);
    }
}

TEST_CASE("ledger: transaction encoding round-trips") {
    Harness h = scenario_harness();
    std::vector<Payload> payloads = {
        payload::Register{Role::Verifier, test::key_for("x").public_key, "x"},
        payload::Accredit{h.addr("x"), false},
        payload::SubmitCredit{"kind", sha256(std::string_view{"e"}), 5},
        payload::Approve{3},
        payload::Transfer{h.addr("A"), 9},
        payload::Burn{4},
        payload::CreatePool{1, 2},
        payload::AddLiquidity{3, 4},
        payload::RemoveLiquidity{5},
        payload::Swap{amm::Direction::CarbonIn, 6, 7},
    };
    for (const auto& p : payloads) {
        auto tx = h.sign("A", p);
        auto text = canonical_serialize(encode(tx));
        CHECK(decode_transaction(canonical_parse(text)) == tx);
        CHECK(tx_hash(decode_transaction(canonical_parse(text))) == tx_hash(tx));
    }
    Value extra = encode(h.sign("A", payload::Burn{1}));
    extra.set("memo", Value::text("x"));
    CHECK(test::error_of([&] { (void)decode_transaction(extra); }) == ErrorCode::ParseError);
}

TEST_CASE("ledger: sealing") {
    Harness h = scenario_harness();
    auto genesis = genesis_block(h.ledger().genesis());
    CHECK(genesis.header.height == 0);
    CHECK(genesis.header.parent_hash.is_zero());

    const Block& b1 = h.ledger().seal(10);
    CHECK(b1.header.height == 1);
    CHECK(b1.header.parent_hash == header_hash(genesis.header));
    CHECK(b1.transactions.size() == 1);
    const Block& b2 = h.ledger().seal(10);
    CHECK(b2.header.height == 2);
    CHECK(b2.transactions.empty());
    CHECK(test::error_of([&] { h.ledger().seal(9); }) == ErrorCode::TimestampRegression);
}

TEST_CASE("ledger: verify_chain detects tampering") {
    Harness h = scenario_harness();
    h.ledger().seal(1);
    for (int i = 0; i < 3; ++i) {
        h.send("A", payload::Register{Role::Customer, test::key_for("A").public_key, ""});  // rejected, not logged
        REQUIRE(h.register_as("C" + std::to_string(i), Role::Customer).accepted());
        h.ledger().seal(2 + static_cast<std::uint64_t>(i));
    }
    std::vector<Block> chain = h.ledger().blocks();
    REQUIRE(chain.size() == 4);
    const auto& genesis = h.ledger().genesis();
    CHECK_FALSE(verify_chain(genesis, chain, mock_scheme()).has_value());

    SUBCASE("transaction byte flipped") {
        auto t = chain;
        t[1].transactions[0].signature[3] ^= 0x10;
        auto v = verify_chain(genesis, t, mock_scheme());
        REQUIRE(v);
        CHECK(v->height == 2);
        CHECK(v->kind == ViolationKind::TxListHash);
    }
    SUBCASE("blocks swapped") {
        auto t = chain;
        std::swap(t[1], t[2]);
        auto v = verify_chain(genesis, t, mock_scheme());
        REQUIRE(v);
        CHECK(v->height == 2);
        CHECK(v->kind == ViolationKind::ParentHash);
    }
    SUBCASE("state root rewritten with a consistent header hash") {
        auto t = chain;
        t[2].header.state_root.raw()[0] ^= 1;
        t[2].hash = header_hash(t[2].header);
        auto v = verify_chain(genesis, t, mock_scheme());
        REQUIRE(v);
        CHECK(v->height == 3);
        CHECK(v->kind == ViolationKind::StateRoot);
    }
    SUBCASE("timestamp regression") {
        auto t = chain;
        t[3].header.timestamp = 0;
        t[3].hash = header_hash(t[3].header);
        auto v = verify_chain(genesis, t, mock_scheme());
        REQUIRE(v);
        CHECK(v->kind == ViolationKind::TimestampRegression);
    }
    SUBCASE("restore rejects a chain its log disagrees with") {
        auto log = h.ledger().log();
        log.pop_back();
        CHECK(test::error_of([&] { (void)Ledger::restore(genesis, mock_scheme(), chain, log); }) ==
              ErrorCode::RootMismatch);
        auto ok = Ledger::restore(genesis, mock_scheme(), chain, h.ledger().log());
        CHECK(state_root(ok.state()) == state_root(h.state()));
    }
}

TEST_CASE("ledger: replay equals live state") {
    Harness h = scenario_harness();
    auto sub = h.send("B", payload::SubmitCredit{"forest", sha256(std::string_view{"e"}), 50'000'000});
    REQUIRE(sub.accepted());
    h.ledger().seal(5);
    for (int i = 1; i <= 4; ++i) h.send("v" + std::to_string(i), payload::Approve{sub.outputs.at("proposal_id")});
    h.send("B", payload::Transfer{h.addr("A"), 20'000'000});
    WorldState replayed = replay(h.ledger().genesis(), h.ledger().log(), mock_scheme());
    CHECK(state_root(replayed) == state_root(h.state()));
    CHECK(codec::encode(replayed) == codec::encode(h.state()));
}
