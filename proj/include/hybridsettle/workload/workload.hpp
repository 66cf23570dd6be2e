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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <hybridsettle/config.hpp>
#include <hybridsettle/ledger/ledger.hpp>
#include <hybridsettle/offchain/records.hpp>

namespace hybridsettle::workload {

struct WorkloadConfig {
    std::uint64_t seed{42};
    std::uint64_t hours{24};
    std::vector<double> hourly_rate;  // tx/hour, one entry per hour of day
    double price_mean{45.0};          // milli-currency/kWh
    double price_sd{15.0};
    std::uint64_t energy_min{1};  // kWh
    std::uint64_t energy_max{50};
    std::vector<std::string> regions;
    std::uint64_t batch_max{64};
    double rate_ref{450.0};  // tx/hour
    double carbon_price_min{20.0};  // currency/tonne
    double carbon_price_max{80.0};
    std::uint64_t participants{256};

    // Double-peak day: trough 400/h overnight, peaks of 1600/h around 09:00 and 19:00-20:00.
    static std::vector<double> default_profile();
    static WorkloadConfig defaults();
    // Unset keys keep their defaults. Throws ConfigError on invalid values.
    static WorkloadConfig from_config(const KeyValueConfig& config);

    // Throws ConfigError unless every invariant holds.
    void validate() const;
    [[nodiscard]] double rate_for_hour(std::uint64_t hour) const { return hourly_rate[hour % hourly_rate.size()]; }
    // Writes every field under its config key.
    void store(KeyValueConfig& config) const;
};

// Per-purpose seed: first 8 bytes (big-endian) of keccak256(be64(master) || purpose).
std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose);
std::mt19937_64 make_rng(std::uint64_t master, std::string_view purpose);

struct TimedRecord {
    std::uint64_t clock{0};
    offchain::SettlementRecord record;

    friend bool operator==(const TimedRecord&, const TimedRecord&) = default;
};

// Anonymous id pool derived from the seed alone.
std::vector<offchain::ParticipantId> participant_pool(std::uint64_t seed, std::uint64_t size);

// Poisson arrivals per hour, sorted by clock; record timestamps equal arrival clocks.
std::vector<TimedRecord> gen_energy_stream(const WorkloadConfig& config);

// max(1, round(batch_max / (1 + rate / rate_ref)))
std::uint64_t batch_size_for(double rate, const WorkloadConfig& config);

enum class CarbonOpKind : std::uint8_t { Register, Transfer, Retire };
enum class Validity : std::uint8_t { Valid, OverTransfer, OverRetire, Unauthorized };

std::string_view op_kind_name(CarbonOpKind kind) noexcept;
std::string_view validity_name(Validity validity) noexcept;

struct CarbonScriptOp {
    CarbonOpKind kind{CarbonOpKind::Register};
    Validity validity{Validity::Valid};
    Bytes32 asset_id;
    std::uint64_t amount{0};  // register: total
    ledger::AccountId actor;
    ledger::AccountId recipient;  // transfer: destination; register: initial owner
    std::string asset_type;       // register only
    std::uint64_t issuance_year{0};
    double carbon_price{0.0};  // register only, currency/tonne

    [[nodiscard]] ledger::Call call() const;
};

struct CarbonScript {
    ledger::AccountId authority;
    std::vector<ledger::AccountId> holders;
    std::vector<CarbonScriptOp> ops;
};

inline constexpr std::size_t kCarbonAssets = 6;
inline constexpr std::size_t kCarbonValidOps = 120;
inline constexpr std::size_t kCarbonInvalidPerKind = 10;

// Registrations, then valid transfers and retirements, then 10 each of
// OverTransfer, OverRetire and Unauthorized in shuffled order. Each invalid op
// breaks exactly one check against the dry-run state.
CarbonScript gen_carbon_script(std::uint64_t seed, const WorkloadConfig& config = WorkloadConfig::defaults());

}  // namespace hybridsettle::workload
