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
#include <string>
#include <utility>
#include <vector>

#include <hybridsettle/config.hpp>

namespace hybridsettle::ledger {

// Simulated gas prices. EVM-flavoured magnitudes; the schedule is the
// measurement instrument for every experiment and is echoed in every report.
struct GasSchedule {
    std::uint64_t tx_base{21000};
    std::uint64_t calldata_byte{16};
    std::uint64_t storage_write_new{20000};
    std::uint64_t storage_write_update{5000};
    std::uint64_t storage_read{2100};
    std::uint64_t event_base{750};
    std::uint64_t event_byte{8};
    std::uint64_t hash_op{36};
    std::uint64_t modexp_fixed{2700};
    std::uint64_t sig_verify{3000};
    double penalty_alpha{0.5};
    std::uint64_t daily_capacity{20000};

    // Reads `gas.<field>` keys; missing keys keep their defaults.
    // Throws ConfigError on negative alpha or zero capacity.
    static GasSchedule from_config(const KeyValueConfig& config);

    // (name, value) pairs in declaration order.
    [[nodiscard]] std::vector<std::pair<std::string, std::string>> entries() const;
    // Single-line `name=value;...` echo for report headers.
    [[nodiscard]] std::string echo() const;

    friend bool operator==(const GasSchedule&, const GasSchedule&) = default;
};

// 1 while cumulative <= daily_capacity, otherwise
// 1 + alpha * ((cumulative - capacity) / capacity)^2.
double capacity_penalty(std::uint64_t cumulative, const GasSchedule& schedule);

// ceil(raw_gas * capacity_penalty(cumulative)), computed so that any excess
// with alpha > 0 yields strictly more than raw_gas.
std::uint64_t apply_capacity_penalty(std::uint64_t raw_gas, std::uint64_t cumulative, const GasSchedule& schedule);

}  // namespace hybridsettle::ledger
