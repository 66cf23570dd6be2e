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

#include <hybridsettle/contracts/carbon.hpp>
#include <hybridsettle/contracts/deploy.hpp>
#include <hybridsettle/crypto/keccak.hpp>
#include <hybridsettle/workload/workload.hpp>

using namespace hybridsettle;
using namespace hybridsettle::workload;

TEST_CASE("seed derivation is the keccak prefix of master and purpose", "[workload]") {
    Bytes pre;
    append_u64_be(pre, 42);
    append(pre, as_bytes("arrivals"));
    const auto h = crypto::keccak256(ByteView{pre});
    CHECK(derive_seed(42, "arrivals") == read_u64_be(h.view().first(8)));
    CHECK(derive_seed(42, "arrivals") != derive_seed(42, "prices"));
    CHECK(derive_seed(42, "arrivals") != derive_seed(43, "arrivals"));
}

TEST_CASE("energy stream is deterministic and well-formed", "[workload]") {
    const auto cfg = WorkloadConfig::defaults();
    const auto a = gen_energy_stream(cfg);
    const auto b = gen_energy_stream(cfg);
    REQUIRE(a == b);
    REQUIRE_FALSE(a.empty());
    auto other = cfg;
    other.seed = 43;
    CHECK(gen_energy_stream(other) != a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& r = a[i];
        if (i) REQUIRE(a[i - 1].clock <= r.clock);
        REQUIRE(r.clock < cfg.hours * 3600);
        REQUIRE(r.record.timestamp == r.clock);
        REQUIRE(r.record.energy_kwh >= cfg.energy_min);
        REQUIRE(r.record.energy_kwh <= cfg.energy_max);
        REQUIRE(r.record.price_milli > 0);
        REQUIRE(std::find(cfg.regions.begin(), cfg.regions.end(), r.record.region) != cfg.regions.end());
    }
}

TEST_CASE("zero rates produce an empty stream", "[workload]") {
    auto cfg = WorkloadConfig::defaults();
    cfg.hourly_rate.assign(24, 0.0);
    CHECK(gen_energy_stream(cfg).empty());
}

TEST_CASE("doubling the rate doubles arrivals within 10 percent", "[workload][property]") {
    auto cfg = WorkloadConfig::defaults();
    cfg.hours = 24;
    cfg.hourly_rate.assign(24, 500.0);
    const auto low = gen_energy_stream(cfg).size();
    cfg.hourly_rate.assign(24, 1000.0);
    const auto high = gen_energy_stream(cfg).size();
    REQUIRE(low >= 10000);
    const double ratio = static_cast<double>(high) / static_cast<double>(low);
    CHECK(ratio >= 1.8);
    CHECK(ratio <= 2.2);
    // Poisson mean: 24 * 500 = 12000 with sd ~110.
    CHECK(std::abs(static_cast<double>(low) - 12000.0) < 600.0);
}

TEST_CASE("batch size shrinks as the rate grows", "[workload]") {
    const auto cfg = WorkloadConfig::defaults();
    CHECK(batch_size_for(0.0, cfg) == cfg.batch_max);
    CHECK(batch_size_for(cfg.rate_ref, cfg) == cfg.batch_max / 2);
    std::uint64_t prev = batch_size_for(0.0, cfg);
    for (double r = 10.0; r < 100000.0; r *= 1.3) {
        const auto b = batch_size_for(r, cfg);
        REQUIRE(b <= prev);
        REQUIRE(b >= 1);
        prev = b;
    }
    CHECK(batch_size_for(1e12, cfg) == 1);
}

TEST_CASE("workload config round trip and validation", "[workload]") {
    const auto cfg = WorkloadConfig::defaults();
    CHECK(cfg.hourly_rate.size() == 24);
    KeyValueConfig kv;
    cfg.store(kv);
    const auto back = WorkloadConfig::from_config(kv);
    CHECK(back.hourly_rate == cfg.hourly_rate);
    CHECK(back.regions == cfg.regions);
    CHECK(back.seed == cfg.seed);
    auto bad = cfg;
    bad.energy_min = 0;
    CHECK_THROWS(bad.validate());
    bad = cfg;
    bad.regions.clear();
    CHECK_THROWS(bad.validate());
}

TEST_CASE("carbon script has the expected mix and an independent dry run agrees", "[workload][carbon]") {
    const auto script = gen_carbon_script(42);
    const auto again = gen_carbon_script(42);
    REQUIRE(script.ops.size() == again.ops.size());

    std::map<Validity, int> counts;
    std::map<std::pair<Bytes32, std::string>, std::uint64_t> avail;
    std::map<Bytes32, std::uint64_t> totals;
    int registers = 0;
    for (const auto& op : script.ops) {
        counts[op.validity] += 1;
        bool ok = false;
        switch (op.kind) {
            case CarbonOpKind::Register:
                ok = op.actor == script.authority && !totals.contains(op.asset_id);
                if (ok) {
                    totals[op.asset_id] = op.amount;
                    avail[{op.asset_id, op.recipient}] = op.amount;
                    ++registers;
                    CHECK(op.amount >= 10000);
                    CHECK(op.amount <= 1000000);
                    CHECK(op.carbon_price >= 20.0);
                    CHECK(op.carbon_price <= 80.0);
                }
                break;
            case CarbonOpKind::Transfer: {
                const auto it = avail.find({op.asset_id, op.actor});
                ok = it != avail.end() && op.amount <= it->second;
                if (ok) {
                    it->second -= op.amount;
                    avail[{op.asset_id, op.recipient}] += op.amount;
                }
                break;
            }
            case CarbonOpKind::Retire: {
                const auto it = avail.find({op.asset_id, op.actor});
                ok = it != avail.end() && op.amount <= it->second;
                if (ok) it->second -= op.amount;
                break;
            }
        }
        INFO(op_kind_name(op.kind) << " " << validity_name(op.validity));
        REQUIRE(ok == (op.validity == Validity::Valid));
        if (op.validity == Validity::OverTransfer) REQUIRE(op.kind == CarbonOpKind::Transfer);
        if (op.validity == Validity::OverRetire) REQUIRE(op.kind == CarbonOpKind::Retire);
    }
    CHECK(registers == static_cast<int>(kCarbonAssets));
    CHECK(counts[Validity::Valid] == static_cast<int>(kCarbonValidOps + kCarbonAssets));
    CHECK(counts[Validity::OverTransfer] == 10);
    CHECK(counts[Validity::OverRetire] == 10);
    CHECK(counts[Validity::Unauthorized] == 10);
}

TEST_CASE("carbon script outcomes on the ledger match their labels", "[workload][carbon]") {
    const auto script = gen_carbon_script(7);
    ledger::Ledger l{ledger::GasSchedule{}, "gov"};
    contracts::deploy_all(l);
    l.execute_tx("gov", ledger::grant_role(script.authority, ledger::Role::Authority));
    for (const auto& op : script.ops) {
        const auto& r = l.execute_tx(op.actor, op.call());
        REQUIRE(r.ok() == (op.validity == Validity::Valid));
        if (op.validity == Validity::OverTransfer || op.validity == Validity::OverRetire) {
            REQUIRE(r.revert_reason == "exceeds available");
        }
        if (op.validity == Validity::Unauthorized) REQUIRE(r.revert_reason == "unauthorized");
    }
}
