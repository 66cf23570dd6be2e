/*
   Copyright 2026 The hybridsettle Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include <hybridsettle/contracts/accumulator_verifier.hpp>
#include <hybridsettle/contracts/carbon.hpp>
#include <hybridsettle/contracts/deploy.hpp>
#include <hybridsettle/contracts/identity.hpp>
#include <hybridsettle/contracts/trading.hpp>
#include <hybridsettle/contracts/verifier.hpp>
#include <hybridsettle/crypto/accumulator.hpp>
#include <hybridsettle/crypto/keccak.hpp>
#include <hybridsettle/crypto/prime.hpp>

using namespace hybridsettle;
using namespace hybridsettle::contracts;
using ledger::Ledger;
using ledger::Role;

namespace {

Ledger fresh() {
    Ledger l{ledger::GasSchedule{}, "gov"};
    deploy_all(l);
    return l;
}

std::string reason(const ledger::TxReceipt& r) { return r.revert_reason.value_or("ok"); }

Bytes32 id_of(std::string_view s) { return crypto::keccak256(s); }

}  // namespace

TEST_CASE("verifier commit and lookup", "[contracts][verifier]") {
    auto l = fresh();
    const auto id = id_of("c1");
    const auto value = id_of("v1");
    CHECK(reason(l.execute_tx("stranger", verifier::commit(id, CommitmentKind::SingleDigest, value, 1))) == "unauthorized");
    l.execute_tx("gov", ledger::grant_role("op", Role::Authority));
    CHECK(reason(l.execute_tx("op", verifier::commit(id, CommitmentKind::SingleDigest, value, 2))) == "invalid commitment");
    CHECK(reason(l.execute_tx("op", verifier::commit(id, CommitmentKind::BatchRoot, value, 0))) == "invalid commitment");
    const auto& ok = l.execute_tx("op", verifier::commit(id, CommitmentKind::SingleDigest, value, 1));
    CHECK(ok.ok());
    // role lookup (hash + read), 3 fresh slots, 3 slot hashes, 1 read, event with 4 words.
    CHECK(ok.gas_used == 21000 + 16 * (4 + 128) + (36 + 2100) + 3 * 36 + 2100 + 3 * 20000 + 750 + 8 * 128);
    CHECK(reason(l.execute_tx("op", verifier::commit(id, CommitmentKind::SingleDigest, value, 1))) == "commitment exists");
    l.advance_clock(100);
    CHECK(l.execute_tx("op", verifier::commit(id_of("c2"), CommitmentKind::BatchRoot, value, 17)).ok());

    const auto got = verifier::get(l, id, "anyone");
    REQUIRE(got);
    CHECK(got->value == value);
    CHECK(got->kind == CommitmentKind::SingleDigest);
    CHECK(got->committer == "op");
    CHECK(got->clock == 0);
    const auto batch = verifier::get(l, id_of("c2"), "anyone");
    REQUIRE(batch);
    CHECK(batch->declared_count == 17);
    CHECK(batch->clock == 100);
    CHECK_FALSE(verifier::get(l, id_of("missing"), "anyone"));
}

TEST_CASE("trading orders and settlement", "[contracts][trading]") {
    auto l = fresh();
    const auto buy = id_of("b");
    const auto sell = id_of("s");
    CHECK(reason(l.execute_tx("p1", trading::place_order(buy, Side::Buy, 10, 45000, "north"))) == "unauthorized");
    l.execute_tx("gov", ledger::grant_role("p1", Role::Prosumer));
    l.execute_tx("gov", ledger::grant_role("p2", Role::Prosumer));
    CHECK(reason(l.execute_tx("p1", trading::place_order(buy, Side::Buy, 0, 45000, "north"))) == "invalid order");
    CHECK(reason(l.execute_tx("p1", trading::place_order(buy, Side::Buy, 10, 45000, ""))) == "invalid order");
    CHECK(reason(l.execute_tx("p1", trading::place_order(buy, Side::Buy, 10, 45000, "abcdefghijklmnopq"))) ==
          "invalid order");
    CHECK(l.execute_tx("p1", trading::place_order(buy, Side::Buy, 10, 45000, "north")).ok());
    CHECK(reason(l.execute_tx("p1", trading::place_order(buy, Side::Buy, 10, 45000, "north"))) == "order exists");
    CHECK(l.execute_tx("p2", trading::place_order(sell, Side::Sell, 10, 44000, "north")).ok());
    const auto other = id_of("o");
    CHECK(l.execute_tx("p2", trading::place_order(other, Side::Sell, 11, 44000, "north")).ok());

    const auto anchor = id_of("anchor");
    CHECK(reason(l.execute_tx("nobody", trading::settle(buy, sell, anchor))) == "unauthorized");
    CHECK(reason(l.execute_tx("p1", trading::settle(buy, id_of("x"), anchor))) == "unknown order");
    CHECK(reason(l.execute_tx("p1", trading::settle(buy, other, anchor))) == "no match");
    CHECK(reason(l.execute_tx("p1", trading::settle(sell, buy, anchor))) == "no match");
    CHECK(reason(l.execute_tx("p1", trading::settle(buy, sell, anchor))) == "no anchor");
    CHECK(l.execute_tx("p1", verifier::commit(anchor, CommitmentKind::SingleDigest, id_of("d"), 1)).ok());
    CHECK(l.execute_tx("p1", trading::settle(buy, sell, anchor)).ok());
    CHECK(reason(l.execute_tx("p1", trading::settle(buy, sell, anchor))) == "order closed");

    const auto o = trading::read_order(l.state(), buy);
    REQUIRE(o);
    CHECK(o->status == OrderStatus::Settled);
    CHECK(o->region == "north");
    CHECK(o->quantity_kwh == 10);
    CHECK(trading::read_order(l.state(), other)->status == OrderStatus::Open);
}

TEST_CASE("carbon registry revert reasons", "[contracts][carbon]") {
    auto l = fresh();
    const auto a = id_of("asset");
    CHECK(reason(l.execute_tx("auth", carbon::register_asset(a, "vcs", 100, 2024, "h0"))) == "unauthorized");
    l.execute_tx("gov", ledger::grant_role("auth", Role::Authority));
    CHECK(reason(l.execute_tx("auth", carbon::register_asset(a, "vcs", 0, 2024, "h0"))) == "invalid amount");
    CHECK(reason(l.execute_tx("auth", carbon::register_asset(a, "", 10, 2024, "h0"))) == "invalid asset");
    CHECK(l.execute_tx("auth", carbon::register_asset(a, "vcs", 100, 2024, "h0")).ok());
    CHECK(reason(l.execute_tx("auth", carbon::register_asset(a, "vcs", 100, 2024, "h0"))) == "asset exists");

    CHECK(reason(l.execute_tx("h0", carbon::transfer(a, "h1", 0))) == "invalid amount");
    CHECK(reason(l.execute_tx("h0", carbon::transfer(a, "h0", 1))) == "invalid recipient");
    CHECK(reason(l.execute_tx("h0", carbon::transfer(id_of("nope"), "h1", 1))) == "unknown asset");
    CHECK(reason(l.execute_tx("zz", carbon::transfer(a, "h1", 1))) == "unauthorized");
    CHECK(reason(l.execute_tx("h0", carbon::transfer(a, "h1", 101))) == "exceeds available");
    CHECK(l.execute_tx("h0", carbon::transfer(a, "h1", 40)).ok());
    CHECK(reason(l.execute_tx("h1", carbon::retire(a, 41))) == "exceeds available");
    CHECK(reason(l.execute_tx("h1", carbon::retire(a, 0))) == "invalid amount");
    CHECK(reason(l.execute_tx("zz", carbon::retire(a, 1))) == "unauthorized");
    CHECK(l.execute_tx("h1", carbon::retire(a, 15)).ok());

    const auto asset = carbon::read_asset(l.state(), a);
    REQUIRE(asset);
    REQUIRE(asset->holdings.size() == 2);
    CHECK(asset->holdings[0] == CarbonHolding{"h0", 60, 0});
    CHECK(asset->holdings[1] == CarbonHolding{"h1", 25, 15});
    CHECK(asset->conserved());
    CHECK(asset->available_sum() + asset->retired_sum() == asset->total);
    CHECK(carbon::read_all(l.state()).size() == 1);
}

TEST_CASE("carbon random operations keep supply conserved and match a reference model", "[contracts][carbon][property]") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        auto l = fresh();
        l.execute_tx("gov", ledger::grant_role("auth", Role::Authority));
        struct Bal {
            std::uint64_t avail{0};
            std::uint64_t retired{0};
        };
        std::map<int, std::map<std::string, Bal>> model;
        std::map<int, std::uint64_t> totals;
        const int assets = 1 + static_cast<int>(rng() % 3);
        for (int a = 0; a < assets; ++a) {
            const std::uint64_t total = 1 + rng() % 5000;
            totals[a] = total;
            model[a]["h0"].avail = total;
            REQUIRE(l.execute_tx("auth", carbon::register_asset(id_of("a" + std::to_string(a)), "t", total, 2020, "h0")).ok());
        }
        std::uint64_t last_retired = 0;
        for (int step = 0; step < 150; ++step) {
            const int a = static_cast<int>(rng() % assets);
            const auto aid = id_of("a" + std::to_string(a));
            const std::string from = "h" + std::to_string(rng() % 4);
            const std::uint64_t amount = 1 + rng() % 2500;
            const auto before = l.state_digest();
            auto& bal = model[a];
            const bool holds = bal.contains(from);
            if (rng() % 2 == 0) {
                std::string to = "h" + std::to_string(rng() % 4);
                if (to == from) to = "h9";
                const auto& r = l.execute_tx(from, carbon::transfer(aid, to, amount));
                const bool expect = holds && amount <= bal[from].avail;
                REQUIRE(r.ok() == expect);
                if (expect) {
                    bal[from].avail -= amount;
                    bal[to].avail += amount;
                }
            } else {
                const auto& r = l.execute_tx(from, carbon::retire(aid, amount));
                const bool expect = holds && amount <= bal[from].avail;
                REQUIRE(r.ok() == expect);
                if (expect) {
                    bal[from].avail -= amount;
                    bal[from].retired += amount;
                }
            }
            if (!l.receipts().back().ok()) REQUIRE(l.state_digest() == before);
            std::uint64_t retired_all = 0;
            for (const auto& asset : carbon::read_all(l.state())) {
                REQUIRE(asset.available_sum() + asset.retired_sum() == asset.total);
                retired_all += asset.retired_sum();
            }
            REQUIRE(retired_all >= last_retired);
            last_retired = retired_all;
        }
        for (int a = 0; a < assets; ++a) {
            const auto asset = carbon::read_asset(l.state(), id_of("a" + std::to_string(a)));
            REQUIRE(asset);
            for (const auto& h : asset->holdings) {
                REQUIRE(model[a].contains(h.owner));
                REQUIRE(h.available == model[a][h.owner].avail);
                REQUIRE(h.retired == model[a][h.owner].retired);
            }
        }
    }
}

TEST_CASE("accumulator verifier", "[contracts][accumulator]") {
    auto l = fresh();
    const crypto::BigInt n{77};
    CHECK(reason(l.execute_tx("x", accver::set_state(43, n, 2))) == "unauthorized");
    CHECK(reason(l.execute_tx("gov", accver::set_state(0, n, 2))) == "invalid state");
    CHECK(reason(l.execute_tx("gov", accver::set_state(43, n, 1))) == "invalid state");
    CHECK(reason(l.execute_tx("gov", accver::verify_membership(32, 3, n))) == "no accumulator");
    CHECK(l.execute_tx("gov", accver::set_state(43, n, 2)).ok());
    const auto& yes = l.execute_tx("x", accver::verify_membership(32, 3, n));
    CHECK(accver::decode_result(yes.output));
    const auto& no = l.execute_tx("x", accver::verify_membership(32, 5, n));
    CHECK_FALSE(accver::decode_result(no.output));
    CHECK(yes.gas_used == no.gas_used);
    const auto st = accver::read_state(l.state());
    REQUIRE(st);
    CHECK(st->value == 43);
    CHECK(st->epoch == 1);
    CHECK(l.execute_tx("gov", accver::set_state(8, n, 2)).ok());
    CHECK(accver::read_state(l.state())->epoch == 2);
}

TEST_CASE("membership gas does not depend on set size", "[contracts][accumulator]") {
    crypto::BigInt p, q;
    mpz_nextprime(p.get_mpz_t(), crypto::BigInt{"0xf0e1d2c3b4a5968778695a4b3c2d1e0ff0e1d2c3b4a5968778695a4b3c2d1e0f"}.get_mpz_t());
    mpz_nextprime(q.get_mpz_t(), crypto::BigInt{"0xe1d2c3b4a5968778695a4b3c2d1e0ff0e1d2c3b4a5968778695a4b3c2d1e0ff1"}.get_mpz_t());
    const crypto::AccumulatorParams params{p * q, 3};
    std::vector<std::uint64_t> gas;
    for (int size : {1, 10, 100}) {
        auto l = fresh();
        auto s = crypto::acc_empty(params);
        std::vector<crypto::BigInt> primes;
        for (int i = 0; i < size; ++i) {
            Bytes d;
            append_u64_be(d, static_cast<std::uint64_t>(i));
            primes.push_back(crypto::hash_to_prime(d));
            s = crypto::acc_add(s, primes.back());
        }
        REQUIRE(l.execute_tx("gov", accver::set_state(s.value, params.modulus, params.generator)).ok());
        const auto w = crypto::acc_witness(s, primes.front());
        const auto& r = l.execute_tx("x", accver::verify_membership(w.value, w.element, params.modulus));
        REQUIRE(accver::decode_result(r.output));
        gas.push_back(r.gas_used);
    }
    CHECK(gas[0] == gas[1]);
    CHECK(gas[1] == gas[2]);
}

namespace {

struct Party {
    std::string account;
    std::string did;
    crypto::KeyPair keys;
};

Party make_party(const std::string& name) {
    return {name, "did:test:" + name, crypto::default_signature_scheme().keypair_from_seed(as_bytes(name))};
}

void authenticate(Ledger& l, const Party& p) {
    const auto sig = crypto::default_signature_scheme().sign(
        p.keys.secret_key, did_auth_message(p.did, l.clock() / kAuthBucketSeconds));
    REQUIRE(l.execute_tx(p.account, did::authenticate(p.did, sig)).ok());
}

}  // namespace

TEST_CASE("did registry lifecycle", "[contracts][identity]") {
    auto l = fresh();
    const auto& scheme = crypto::default_signature_scheme();
    auto alice = make_party("alice");
    CHECK(reason(l.execute_tx("alice", did::register_did(alice.did, alice.keys.public_key))) == "unauthorized");
    l.execute_tx("gov", ledger::grant_role("alice", Role::Prosumer));
    CHECK(reason(l.execute_tx("alice", did::register_did("", alice.keys.public_key))) == "invalid did");
    CHECK(reason(l.execute_tx("alice", did::register_did(alice.did, Bytes{}))) == "invalid key");
    CHECK(l.execute_tx("alice", did::register_did(alice.did, alice.keys.public_key)).ok());
    CHECK(reason(l.execute_tx("alice", did::register_did(alice.did, alice.keys.public_key))) == "did exists");

    l.advance_clock(120);
    const auto bad = scheme.sign(alice.keys.secret_key, did_auth_message(alice.did, 0));
    CHECK(reason(l.execute_tx("alice", did::authenticate(alice.did, bad))) == "auth failed");
    CHECK(reason(l.execute_tx("alice", did::authenticate("did:test:nobody", bad))) == "unknown did");
    const auto good = scheme.sign(alice.keys.secret_key, did_auth_message(alice.did, 2));
    CHECK(l.execute_tx("alice", did::authenticate(alice.did, good)).ok());
    CHECK(reason(l.execute_tx("alice", did::authenticate(alice.did, good))) == "auth replay");

    const auto next = scheme.keypair_from_seed(as_bytes("alice-2"));
    const auto forged = scheme.sign(next.secret_key, did_rotation_message(alice.did, next.public_key));
    CHECK(reason(l.execute_tx("alice", did::rotate(alice.did, next.public_key, forged))) == "bad rotation");
    const auto signed_rot = scheme.sign(alice.keys.secret_key, did_rotation_message(alice.did, next.public_key));
    l.advance_clock(5);
    CHECK(l.execute_tx("alice", did::rotate(alice.did, next.public_key, signed_rot)).ok());

    const auto entry = did::read_entry(l.state(), alice.did);
    REQUIRE(entry);
    CHECK(entry->controller == "alice");
    CHECK(entry->active_key == next.public_key);
    CHECK(entry->last_auth_clock == 120);
    REQUIRE(entry->key_history.size() == 2);
    CHECK(entry->key_history[0].key == alice.keys.public_key);
    CHECK(entry->key_history[0].clock == 0);
    CHECK(entry->key_history[1].clock == 125);
    CHECK_FALSE(did::read_entry(l.state(), "did:test:nobody"));
}

TEST_CASE("selective disclosure gates", "[contracts][identity]") {
    auto l = fresh();
    const auto& scheme = crypto::default_signature_scheme();
    auto holder = make_party("holder");
    auto req = make_party("req");
    for (const auto* p : {&holder, &req}) {
        l.execute_tx("gov", ledger::grant_role(p->account, Role::Prosumer));
        REQUIRE(l.execute_tx(p->account, did::register_did(p->did, p->keys.public_key)).ok());
    }
    std::vector<Digest32> leaves;
    for (int i = 0; i < 5; ++i) {
        std::array<std::uint8_t, 16> salt{};
        salt[0] = static_cast<std::uint8_t>(i);
        leaves.push_back(attribute_leaf("k" + std::to_string(i), "v", salt));
    }
    const auto root = crypto::merkle_root(leaves);
    CHECK(reason(l.execute_tx("holder", sd::commit_root(holder.did, root))) == "auth required");
    authenticate(l, holder);
    CHECK(reason(l.execute_tx("req", sd::commit_root(holder.did, root))) == "auth required");
    CHECK(l.execute_tx("holder", sd::commit_root(holder.did, root)).ok());
    CHECK(sd::read_root(l.state(), holder.did)->root == root);

    const auto proof = crypto::merkle_prove(leaves, 3);
    auto auth_for = [&](std::uint64_t nonce, const crypto::KeyPair& signer) {
        const auto msg = disclosure_authorization_message(req.did, leaves[3], nonce);
        return crypto::SignatureBundle{signer.public_key, msg, scheme.sign(signer.secret_key, msg)};
    };

    // Gate 1: requester never authenticated.
    CHECK(reason(l.execute_tx("req", sd::verify_attribute(req.did, holder.did, leaves[3], proof, auth_for(1, holder.keys)))) ==
          "identity gate");
    authenticate(l, req);
    // Caller does not control the requester DID.
    CHECK(reason(l.execute_tx("holder", sd::verify_attribute(req.did, holder.did, leaves[3], proof, auth_for(1, holder.keys)))) ==
          "identity gate");

    const auto& ok = l.execute_tx("req", sd::verify_attribute(req.did, holder.did, leaves[3], proof, auth_for(1, holder.keys)));
    REQUIRE(ok.ok());
    CHECK(sd::decode_result(ok.output));

    auto replay = l.execute_tx("req", sd::verify_attribute(req.did, holder.did, leaves[3], proof, auth_for(1, holder.keys)));
    CHECK(replay.ok());
    CHECK_FALSE(sd::decode_result(replay.output));

    const auto wrong = scheme.keypair_from_seed(as_bytes("wrong"));
    CHECK_FALSE(sd::decode_result(
        l.execute_tx("req", sd::verify_attribute(req.did, holder.did, leaves[3], proof, auth_for(2, wrong))).output));

    auto bad_proof = crypto::merkle_prove(leaves, 2);
    CHECK_FALSE(sd::decode_result(
        l.execute_tx("req", sd::verify_attribute(req.did, holder.did, leaves[3], bad_proof, auth_for(3, holder.keys))).output));

    // Auth window expiry.
    l.advance_clock(kDefaultAuthWindow + 1);
    CHECK(reason(l.execute_tx("req", sd::verify_attribute(req.did, holder.did, leaves[3], proof, auth_for(4, holder.keys)))) ==
          "identity gate");
}
