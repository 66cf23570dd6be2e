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

#include <cmath>
#include <random>
#include <sstream>

#include <hybridsettle/ledger/ledger.hpp>

using namespace hybridsettle;
using namespace hybridsettle::ledger;

namespace {

// put(key, value) stores and emits; get(key) returns; put_then_fail writes then reverts.
class KvContract final : public Contract {
  public:
    [[nodiscard]] std::string_view name() const noexcept override { return "kv"; }
    void execute(std::string_view op, WordReader& args, ExecContext& ctx) const override {
        if (op == "put" || op == "put_then_fail") {
            const std::uint64_t key = args.u64();
            const std::uint64_t value = args.u64();
            Bytes k;
            append_u64_be(k, key);
            ctx.store(ctx.slot("kv", k), Bytes32::from_u64(value));
            ctx.emit("Put", WordWriter{}.u64(value).data());
            if (op == "put_then_fail") ExecContext::revert("forced");
            return;
        }
        if (op == "get") {
            Bytes k;
            append_u64_be(k, args.u64());
            ctx.set_output(WordWriter{}.word(ctx.load(ctx.slot("kv", k))).data());
            return;
        }
        if (op == "guarded") {
            if (!ctx.has_role(ctx.caller(), Role::Authority)) ExecContext::revert("unauthorized");
            return;
        }
        ExecContext::revert("unknown target");
    }
};

Call put(std::uint64_t key, std::uint64_t value, std::string op = "put") {
    return {"kv", std::move(op), WordWriter{}.u64(key).u64(value).data()};
}

Ledger make_ledger(GasSchedule s = {}) {
    Ledger l{s, "gov"};
    l.deploy(std::make_shared<KvContract>());
    return l;
}

constexpr std::uint64_t kPutCalldata = 21000 + 16 * (4 + 64);

}  // namespace

TEST_CASE("gas accounting is exact per primitive", "[ledger][gas]") {
    auto l = make_ledger();
    const auto& first = l.execute_tx("alice", put(1, 7));
    CHECK(first.ok());
    CHECK(first.gas_used == kPutCalldata + 36 + 20000 + 750 + 8 * 32);
    const auto& second = l.execute_tx("alice", put(1, 8));
    CHECK(second.gas_used == kPutCalldata + 36 + 5000 + 750 + 8 * 32);

    const auto v = l.view("alice", Call{"kv", "get", WordWriter{}.u64(1).data()});
    CHECK_FALSE(v.reverted);
    CHECK(v.gas_used == 36 + 2100);
    WordReader r{v.output};
    CHECK(r.u64() == 8);
    CHECK(l.receipts().size() == 2);
    CHECK(l.cumulative_tx_today() == 2);
}

TEST_CASE("zero writes erase slots and cost an update", "[ledger]") {
    auto l = make_ledger();
    const auto empty = l.state_digest();
    CHECK(l.execute_tx("alice", put(5, 1)).ok());
    CHECK(l.state_digest() != empty);
    const auto& r = l.execute_tx("alice", put(5, 0));
    CHECK(r.gas_used == kPutCalldata + 36 + 5000 + 750 + 8 * 32);
    CHECK(l.state_digest() == empty);
    CHECK(l.state().stores.at("kv").empty());
}

TEST_CASE("reverted transactions leave state untouched but still pay gas", "[ledger]") {
    auto l = make_ledger();
    CHECK(l.execute_tx("alice", put(1, 1)).ok());
    const auto before = l.state_digest();
    const auto& r = l.execute_tx("alice", put(2, 2, "put_then_fail"));
    CHECK(r.status == TxStatus::Reverted);
    CHECK(r.revert_reason == "forced");
    CHECK(r.events.empty());
    CHECK(r.gas_used == kPutCalldata + 36 + 20000 + 750 + 8 * 32);
    CHECK(l.state_digest() == before);
    CHECK(l.cumulative_tx_today() == 2);
}

TEST_CASE("unknown contracts and operations revert", "[ledger]") {
    auto l = make_ledger();
    CHECK(l.execute_tx("alice", Call{"nope", "x", {}}).revert_reason == "unknown target");
    CHECK(l.execute_tx("alice", Call{"kv", "x", {}}).revert_reason == "unknown target");
    CHECK(l.execute_tx("alice", Call{"kv", "put", Bytes(10)}).revert_reason == "malformed calldata");
    CHECK_THROWS_AS(l.execute_tx("", put(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(l.deploy(std::make_shared<KvContract>()), std::invalid_argument);
}

TEST_CASE("capacity penalty follows the quadratic surcharge", "[ledger][gas]") {
    GasSchedule s;
    CHECK(capacity_penalty(0, s) == 1.0);
    CHECK(capacity_penalty(s.daily_capacity, s) == 1.0);
    CHECK(capacity_penalty(2 * s.daily_capacity, s) == Catch::Approx(1.5).epsilon(1e-12));
    CHECK(apply_capacity_penalty(1000, 2 * s.daily_capacity, s) == 1500);
    CHECK(apply_capacity_penalty(1000, s.daily_capacity, s) == 1000);
    // ceil: 1000 * 0.5 * (1/20000)^2 is tiny but still rounds up to one unit.
    CHECK(apply_capacity_penalty(1000, s.daily_capacity + 1, s) == 1001);
    s.penalty_alpha = 0.0;
    CHECK(apply_capacity_penalty(1000, 3 * s.daily_capacity, s) == 1000);

    std::mt19937_64 rng(5);
    GasSchedule t;
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t raw = 21000 + rng() % 200000;
        const std::uint64_t cum = rng() % 60000;
        const std::uint64_t got = apply_capacity_penalty(raw, cum, t);
        if (cum <= t.daily_capacity) {
            REQUIRE(got == raw);
        } else {
            const double excess = static_cast<double>(cum - t.daily_capacity) / t.daily_capacity;
            const double expect = raw + std::ceil(raw * 0.5 * excess * excess);
            REQUIRE(std::abs(static_cast<double>(got) - expect) <= 1.0);
            REQUIRE(got >= raw);
        }
    }
}

TEST_CASE("penalty applies on the ledger once the day passes capacity and resets at midnight", "[ledger][gas]") {
    GasSchedule s;
    s.daily_capacity = 3;
    auto l = make_ledger(s);
    std::vector<std::uint64_t> gas;
    for (std::uint64_t i = 0; i < 6; ++i) gas.push_back(l.execute_tx("alice", put(1, 100 + i)).gas_used);
    const std::uint64_t update = kPutCalldata + 36 + 5000 + 750 + 8 * 32;
    CHECK(gas[1] == update);
    CHECK(gas[2] == update);
    CHECK(gas[3] == update + static_cast<std::uint64_t>(std::ceil(update * 0.5 / 9.0)));
    CHECK(gas[4] > gas[3]);
    CHECK(gas[5] > gas[4]);
    l.advance_clock(kSecondsPerDay);
    CHECK(l.cumulative_tx_today() == 0);
    CHECK(l.execute_tx("alice", put(1, 1)).gas_used == update);
    l.advance_clock(10);
    CHECK(l.cumulative_tx_today() == 1);
}

TEST_CASE("ledger execution is deterministic", "[ledger]") {
    auto run = [] {
        auto l = make_ledger();
        std::mt19937_64 rng(9);
        for (int i = 0; i < 300; ++i) {
            const auto op = rng() % 5 == 0 ? "put_then_fail" : "put";
            l.execute_tx("u" + std::to_string(rng() % 4), put(rng() % 20, rng() % 3, op));
            l.advance_clock(rng() % 1000);
        }
        std::ostringstream log;
        write_receipt_log(log, l.receipts());
        return std::pair{l.state_digest(), log.str()};
    };
    const auto a = run();
    const auto b = run();
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
}

TEST_CASE("roles gate governance actions", "[ledger][roles]") {
    auto l = make_ledger();
    CHECK(l.has_role("gov", Role::Governance));
    CHECK(l.execute_tx("bob", Call{"kv", "guarded", {}}).revert_reason == "unauthorized");
    CHECK(l.execute_tx("bob", grant_role("bob", Role::Authority)).revert_reason == "unauthorized");
    CHECK(l.execute_tx("gov", grant_role("bob", Role::Authority)).ok());
    CHECK(l.has_role("bob", Role::Authority));
    CHECK_FALSE(l.has_role("bob", Role::Governance));
    CHECK(l.execute_tx("bob", Call{"kv", "guarded", {}}).ok());
    CHECK(l.execute_tx("gov", revoke_role("bob", Role::Authority)).ok());
    CHECK_FALSE(l.has_role("bob", Role::Authority));
    CHECK(l.execute_tx("gov", Call{"roles", "grant", WordWriter{}.text("bob").u64(16).data()}).revert_reason ==
          "invalid role");
    CHECK(role_name(Role::Auditor) == "auditor");
}

TEST_CASE("views never mutate state or count toward capacity", "[ledger]") {
    auto l = make_ledger();
    const auto before = l.state_digest();
    const auto v = l.view("alice", put(1, 1));
    CHECK_FALSE(v.reverted);
    CHECK(l.state_digest() == before);
    CHECK(l.cumulative_tx_today() == 0);
    CHECK(l.receipts().empty());
    CHECK(l.view("alice", put(1, 1, "put_then_fail")).revert_reason == "forced");
}

TEST_CASE("word codec round-trips and rejects malformed input", "[ledger][words]") {
    const Bytes data = WordWriter{}.u64(42).boolean(true).text("hello").big(crypto::BigInt{258}, 4).data();
    CHECK(data.size() == 32 * 2 + 64 + 64);
    WordReader r{data};
    CHECK(r.u64() == 42);
    CHECK(r.boolean());
    CHECK(r.text() == "hello");
    CHECK(r.big() == 258);
    CHECK(r.done());

    Bytes high(32, 0);
    high[0] = 1;
    CHECK_THROWS_AS(WordReader{high}.u64(), DecodeError);
    const Bytes two = WordWriter{}.u64(2).data();
    CHECK_THROWS_AS(WordReader{two}.boolean(), DecodeError);
    const Bytes long_len = WordWriter{}.u64(100).data();
    CHECK_THROWS_AS(WordReader{long_len}.bytes(), DecodeError);
    CHECK_THROWS_AS(WordReader{Bytes(31)}.word(), DecodeError);
}

TEST_CASE("receipt log format", "[ledger]") {
    auto l = make_ledger();
    l.execute_tx("alice", put(1, 1));
    l.execute_tx("alice", put(1, 1, "put_then_fail"));
    std::ostringstream out;
    write_receipt_log(out, l.receipts());
    const std::string expect_first = "tx_id,clock,contract,operation,status,gas_used,revert_reason\n1,0,kv,put,success," +
                                     std::to_string(kPutCalldata + 36 + 20000 + 1006) + ",\n";
    CHECK(out.str().rfind(expect_first, 0) == 0);
    CHECK(out.str().find(",reverted,") != std::string::npos);
    CHECK(out.str().find(",forced\n") != std::string::npos);
}

TEST_CASE("gas schedule config parsing", "[ledger][gas]") {
    auto cfg = KeyValueConfig::parse("gas.tx_base = 1\ngas.penalty_alpha = 0.25\n");
    const auto s = GasSchedule::from_config(cfg);
    CHECK(s.tx_base == 1);
    CHECK(s.penalty_alpha == 0.25);
    CHECK(s.storage_read == 2100);
    CHECK_THROWS_AS(GasSchedule::from_config(KeyValueConfig::parse("gas.penalty_alpha = -1\n")), ConfigError);
    CHECK_THROWS_AS(GasSchedule::from_config(KeyValueConfig::parse("gas.daily_capacity = 0\n")), ConfigError);
    CHECK(GasSchedule{}.echo().find("daily_capacity=20000") != std::string::npos);
}
