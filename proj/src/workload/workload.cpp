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

#include <hybridsettle/workload/workload.hpp>

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include <hybridsettle/contracts/carbon.hpp>
#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::workload {

namespace {

    std::string join(const std::vector<std::string>& parts) {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += parts[i];
        }
        return out;
    }

    std::string join(const std::vector<double>& parts) {
        std::vector<std::string> s;
        for (double d : parts) s.push_back(format_double(d));
        return join(s);
    }

    std::uint64_t draw_price(std::mt19937_64& rng, double mean, double sd) {
        if (sd == 0.0) return static_cast<std::uint64_t>(std::max<long long>(1, std::llround(mean)));
        std::normal_distribution<double> d(mean, sd);
        // Truncate at 1 by rejection; a pathological mean falls back to the floor.
        for (int i = 0; i < 1000; ++i) {
            const double x = d(rng);
            if (x >= 1.0) return static_cast<std::uint64_t>(std::max<long long>(1, std::llround(x)));
        }
        return 1;
    }

}  // namespace

std::vector<double> WorkloadConfig::default_profile() {
    return {400,  400,  400,  400,  450,  550,  750,  1050, 1400, 1600, 1450, 1150,
            950,  850,  800,  850,  1000, 1250, 1500, 1600, 1600, 1400, 900,  600};
}

WorkloadConfig WorkloadConfig::defaults() {
    WorkloadConfig c;
    c.hourly_rate = default_profile();
    c.regions = {"north", "south", "east", "west"};
    return c;
}

WorkloadConfig WorkloadConfig::from_config(const KeyValueConfig& config) {
    WorkloadConfig c = defaults();
    c.seed = config.get_u64("seed", c.seed);
    c.hours = config.get_u64("hours", c.hours);
    c.hourly_rate = config.get_doubles("hourly_rate", c.hourly_rate);
    c.price_mean = config.get_double("price_mean", c.price_mean);
    c.price_sd = config.get_double("price_sd", c.price_sd);
    c.energy_min = config.get_u64("energy_min", c.energy_min);
    c.energy_max = config.get_u64("energy_max", c.energy_max);
    c.regions = config.get_list("regions", c.regions);
    c.batch_max = config.get_u64("batch_max", c.batch_max);
    c.rate_ref = config.get_double("rate_ref", c.rate_ref);
    c.carbon_price_min = config.get_double("carbon_price_min", c.carbon_price_min);
    c.carbon_price_max = config.get_double("carbon_price_max", c.carbon_price_max);
    c.participants = config.get_u64("participants", c.participants);
    c.validate();
    return c;
}

void WorkloadConfig::validate() const {
    if (hourly_rate.size() != 24) throw ConfigError("hourly_rate needs 24 values");
    for (double r : hourly_rate) {
        if (!(r >= 0.0) || !std::isfinite(r)) throw ConfigError("hourly_rate must be >= 0");
    }
    if (!(price_sd >= 0.0)) throw ConfigError("price_sd must be >= 0");
    if (batch_max < 1) throw ConfigError("batch_max must be >= 1");
    if (energy_min < 1 || energy_min > energy_max) throw ConfigError("energy bounds");
    if (!(rate_ref > 0.0)) throw ConfigError("rate_ref must be > 0");
    if (regions.empty()) throw ConfigError("regions must not be empty");
    for (const auto& r : regions) {
        if (r.empty() || r.size() > offchain::kMaxRegionLength) throw ConfigError("region label length");
    }
    if (!(carbon_price_min >= 0.0) || carbon_price_min > carbon_price_max) throw ConfigError("carbon price bounds");
    if (participants < 1) throw ConfigError("participants must be >= 1");
}

void WorkloadConfig::store(KeyValueConfig& config) const {
    config.set("seed", std::to_string(seed));
    config.set("hours", std::to_string(hours));
    config.set("hourly_rate", join(hourly_rate));
    config.set("price_mean", format_double(price_mean));
    config.set("price_sd", format_double(price_sd));
    config.set("energy_min", std::to_string(energy_min));
    config.set("energy_max", std::to_string(energy_max));
    config.set("regions", join(regions));
    config.set("batch_max", std::to_string(batch_max));
    config.set("rate_ref", format_double(rate_ref));
    config.set("carbon_price_min", format_double(carbon_price_min));
    config.set("carbon_price_max", format_double(carbon_price_max));
    config.set("participants", std::to_string(participants));
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose) {
    Bytes pre;
    append_u64_be(pre, master);
    append(pre, as_bytes(purpose));
    return read_u64_be(crypto::keccak256(pre).view().first(8));
}

std::mt19937_64 make_rng(std::uint64_t master, std::string_view purpose) {
    return std::mt19937_64{derive_seed(master, purpose)};
}

std::vector<offchain::ParticipantId> participant_pool(std::uint64_t seed, std::uint64_t size) {
    const std::uint64_t pool_seed = derive_seed(seed, "ids");
    std::vector<offchain::ParticipantId> pool;
    pool.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        Bytes pre;
        append_u64_be(pre, pool_seed);
        append_u64_be(pre, i);
        const Digest32 h = crypto::keccak256(pre);
        offchain::ParticipantId id{};
        std::copy_n(h.data(), id.size(), id.begin());
        pool.push_back(id);
    }
    return pool;
}

std::vector<TimedRecord> gen_energy_stream(const WorkloadConfig& config) {
    config.validate();
    auto arrivals = make_rng(config.seed, "arrivals");
    auto prices = make_rng(config.seed, "prices");
    auto energy = make_rng(config.seed, "energy");
    auto picks = make_rng(config.seed, "participants");
    const auto pool = participant_pool(config.seed, config.participants);

    std::uniform_int_distribution<std::uint64_t> in_hour(0, 3599);
    std::uniform_int_distribution<std::uint64_t> energy_d(config.energy_min, config.energy_max);
    std::uniform_int_distribution<std::size_t> who(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> where(0, config.regions.size() - 1);
    std::bernoulli_distribution sell(0.5);

    std::vector<TimedRecord> out;
    for (std::uint64_t h = 0; h < config.hours; ++h) {
        const double rate = config.rate_for_hour(h);
        if (rate <= 0.0) continue;
        std::poisson_distribution<std::uint64_t> count_d(rate);
        const std::uint64_t n = count_d(arrivals);
        // Given the count, Poisson arrival times are i.i.d. uniform over the hour.
        std::vector<std::uint64_t> clocks(n);
        for (auto& c : clocks) c = h * 3600 + in_hour(arrivals);
        std::sort(clocks.begin(), clocks.end());
        for (std::uint64_t c : clocks) {
            offchain::SettlementRecord r;
            r.timestamp = c;
            r.participant_id = pool[who(picks)];
            r.tx_type = sell(picks) ? offchain::TxType::Sell : offchain::TxType::Buy;
            r.region = config.regions[where(picks)];
            r.energy_kwh = energy_d(energy);
            r.price_milli = draw_price(prices, config.price_mean, config.price_sd);
            out.push_back({c, std::move(r)});
        }
    }
    return out;
}

std::uint64_t batch_size_for(double rate, const WorkloadConfig& config) {
    const double raw = static_cast<double>(config.batch_max) / (1.0 + std::max(rate, 0.0) / config.rate_ref);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(raw)));
}

std::string_view op_kind_name(CarbonOpKind kind) noexcept {
    switch (kind) {
        case CarbonOpKind::Register: return "register";
        case CarbonOpKind::Transfer: return "transfer";
        case CarbonOpKind::Retire: return "retire";
    }
    return "unknown";
}

std::string_view validity_name(Validity validity) noexcept {
    switch (validity) {
        case Validity::Valid: return "valid";
        case Validity::OverTransfer: return "over_transfer";
        case Validity::OverRetire: return "over_retire";
        case Validity::Unauthorized: return "unauthorized";
    }
    return "unknown";
}

ledger::Call CarbonScriptOp::call() const {
    switch (kind) {
        case CarbonOpKind::Register:
            return contracts::carbon::register_asset(asset_id, asset_type, amount, issuance_year, recipient);
        case CarbonOpKind::Transfer: return contracts::carbon::transfer(asset_id, recipient, amount);
        case CarbonOpKind::Retire: return contracts::carbon::retire(asset_id, amount);
    }
    return {};
}

CarbonScript gen_carbon_script(std::uint64_t seed, const WorkloadConfig& config) {
    auto rng = make_rng(seed, "carbon");
    CarbonScript script;
    script.authority = "registry-authority";
    for (int i = 0; i < 8; ++i) script.holders.push_back(fmt::format("holder-{}", i));
    const ledger::AccountId outsider = "outsider";

    // Registered volumes in tonnes, sized like large installation allocations.
    std::uniform_int_distribution<std::uint64_t> total_d(10'000, 1'000'000);
    std::uniform_int_distribution<std::uint64_t> year_d(2019, 2025);
    std::uniform_real_distribution<double> price_d(config.carbon_price_min, config.carbon_price_max);
    std::uniform_int_distribution<std::size_t> holder_d(0, script.holders.size() - 1);
    const std::vector<std::string> types{"allowance", "offset", "removal"};

    // Dry-run balances: asset index -> owner -> available.
    std::vector<Bytes32> assets;
    std::vector<std::map<ledger::AccountId, std::uint64_t>> available;

    auto asset_id = [&](std::uint64_t n) {
        Bytes pre;
        append(pre, as_bytes("carbon-asset"));
        append_u64_be(pre, seed);
        append_u64_be(pre, n);
        return crypto::keccak256(pre);
    };

    for (std::size_t i = 0; i < kCarbonAssets; ++i) {
        CarbonScriptOp op;
        op.kind = CarbonOpKind::Register;
        op.asset_id = asset_id(i);
        op.amount = total_d(rng);
        op.actor = script.authority;
        op.recipient = script.holders[i % script.holders.size()];
        op.asset_type = types[i % types.size()];
        op.issuance_year = year_d(rng);
        op.carbon_price = price_d(rng);
        assets.push_back(op.asset_id);
        available.push_back({{op.recipient, op.amount}});
        script.ops.push_back(op);
    }

    std::uniform_int_distribution<std::size_t> asset_d(0, kCarbonAssets - 1);
    std::bernoulli_distribution do_retire(0.35);
    std::size_t valid = 0;
    while (valid < kCarbonValidOps) {
        const std::size_t a = asset_d(rng);
        std::vector<ledger::AccountId> funded;
        for (const auto& [owner, amt] : available[a]) {
            if (amt > 0) funded.push_back(owner);
        }
        if (funded.empty()) continue;
        const ledger::AccountId owner = funded[std::uniform_int_distribution<std::size_t>(0, funded.size() - 1)(rng)];
        const std::uint64_t have = available[a][owner];
        CarbonScriptOp op;
        op.asset_id = assets[a];
        op.actor = owner;
        if (do_retire(rng)) {
            op.kind = CarbonOpKind::Retire;
            op.amount = std::uniform_int_distribution<std::uint64_t>(1, std::max<std::uint64_t>(1, have / 10))(rng);
            available[a][owner] -= op.amount;
        } else {
            op.kind = CarbonOpKind::Transfer;
            ledger::AccountId to;
            do {
                to = script.holders[holder_d(rng)];
            } while (to == owner);
            op.recipient = to;
            op.amount = std::uniform_int_distribution<std::uint64_t>(1, std::max<std::uint64_t>(1, have / 3))(rng);
            available[a][owner] -= op.amount;
            available[a][to] += op.amount;
        }
        script.ops.push_back(op);
        ++valid;
    }

    // Invalid section; none of these change state, so the dry-run balances stay current.
    std::uniform_int_distribution<std::uint64_t> delta_d(1, 1000);
    std::vector<CarbonScriptOp> invalid;
    auto holding_of = [&](std::size_t a) {
        std::vector<ledger::AccountId> owners;
        for (const auto& [owner, amt] : available[a]) owners.push_back(owner);
        return owners[std::uniform_int_distribution<std::size_t>(0, owners.size() - 1)(rng)];
    };
    for (std::size_t i = 0; i < kCarbonInvalidPerKind; ++i) {
        const std::size_t a = asset_d(rng);
        const ledger::AccountId owner = holding_of(a);
        CarbonScriptOp op;
        op.kind = CarbonOpKind::Transfer;
        op.validity = Validity::OverTransfer;
        op.asset_id = assets[a];
        op.actor = owner;
        do {
            op.recipient = script.holders[holder_d(rng)];
        } while (op.recipient == owner);
        op.amount = available[a][owner] + delta_d(rng);
        invalid.push_back(op);
    }
    for (std::size_t i = 0; i < kCarbonInvalidPerKind; ++i) {
        const std::size_t a = asset_d(rng);
        const ledger::AccountId owner = holding_of(a);
        CarbonScriptOp op;
        op.kind = CarbonOpKind::Retire;
        op.validity = Validity::OverRetire;
        op.asset_id = assets[a];
        op.actor = owner;
        op.amount = available[a][owner] + delta_d(rng);
        invalid.push_back(op);
    }
    for (std::size_t i = 0; i < kCarbonInvalidPerKind; ++i) {
        CarbonScriptOp op;
        op.validity = Validity::Unauthorized;
        switch (i % 3) {
            case 0:  // registration by an account without the authority role
                op.kind = CarbonOpKind::Register;
                op.asset_id = asset_id(kCarbonAssets + i);
                op.amount = total_d(rng);
                op.actor = script.holders[holder_d(rng)];
                op.recipient = op.actor;
                op.asset_type = types[i % types.size()];
                op.issuance_year = year_d(rng);
                op.carbon_price = price_d(rng);
                break;
            case 1:  // transfer from an account holding nothing of the asset
                op.kind = CarbonOpKind::Transfer;
                op.asset_id = assets[asset_d(rng)];
                op.actor = outsider;
                op.recipient = script.holders[holder_d(rng)];
                op.amount = delta_d(rng);
                break;
            default:
                op.kind = CarbonOpKind::Retire;
                op.asset_id = assets[asset_d(rng)];
                op.actor = outsider;
                op.amount = delta_d(rng);
                break;
        }
        invalid.push_back(op);
    }
    std::shuffle(invalid.begin(), invalid.end(), rng);
    script.ops.insert(script.ops.end(), invalid.begin(), invalid.end());
    return script;
}

}  // namespace hybridsettle::workload
