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

#include <hybridsettle/ledger/gas.hpp>

#include <cmath>

namespace hybridsettle::ledger {

GasSchedule GasSchedule::from_config(const KeyValueConfig& config) {
    GasSchedule s;
    s.tx_base = config.get_u64("gas.tx_base", s.tx_base);
    s.calldata_byte = config.get_u64("gas.calldata_byte", s.calldata_byte);
    s.storage_write_new = config.get_u64("gas.storage_write_new", s.storage_write_new);
    s.storage_write_update = config.get_u64("gas.storage_write_update", s.storage_write_update);
    s.storage_read = config.get_u64("gas.storage_read", s.storage_read);
    s.event_base = config.get_u64("gas.event_base", s.event_base);
    s.event_byte = config.get_u64("gas.event_byte", s.event_byte);
    s.hash_op = config.get_u64("gas.hash_op", s.hash_op);
    s.modexp_fixed = config.get_u64("gas.modexp_fixed", s.modexp_fixed);
    s.sig_verify = config.get_u64("gas.sig_verify", s.sig_verify);
    s.penalty_alpha = config.get_double("gas.penalty_alpha", s.penalty_alpha);
    s.daily_capacity = config.get_u64("gas.daily_capacity", s.daily_capacity);
    if (!(s.penalty_alpha >= 0.0) || !std::isfinite(s.penalty_alpha)) {
        throw ConfigError("gas.penalty_alpha must be a finite value >= 0");
    }
    if (s.daily_capacity == 0) {
        throw ConfigError("gas.daily_capacity must be >= 1");
    }
    return s;
}

std::vector<std::pair<std::string, std::string>> GasSchedule::entries() const {
    return {
        {"tx_base", std::to_string(tx_base)},
        {"calldata_byte", std::to_string(calldata_byte)},
        {"storage_write_new", std::to_string(storage_write_new)},
        {"storage_write_update", std::to_string(storage_write_update)},
        {"storage_read", std::to_string(storage_read)},
        {"event_base", std::to_string(event_base)},
        {"event_byte", std::to_string(event_byte)},
        {"hash_op", std::to_string(hash_op)},
        {"modexp_fixed", std::to_string(modexp_fixed)},
        {"sig_verify", std::to_string(sig_verify)},
        {"penalty_alpha", format_double(penalty_alpha)},
        {"daily_capacity", std::to_string(daily_capacity)},
    };
}

std::string GasSchedule::echo() const {
    std::string out;
    for (const auto& [name, value] : entries()) {
        if (!out.empty()) out += ';';
        out += name + "=" + value;
    }
    return out;
}

double capacity_penalty(std::uint64_t cumulative, const GasSchedule& schedule) {
    if (cumulative <= schedule.daily_capacity) return 1.0;
    const double excess =
        static_cast<double>(cumulative - schedule.daily_capacity) / static_cast<double>(schedule.daily_capacity);
    return 1.0 + schedule.penalty_alpha * excess * excess;
}

std::uint64_t apply_capacity_penalty(std::uint64_t raw_gas, std::uint64_t cumulative, const GasSchedule& schedule) {
    if (cumulative <= schedule.daily_capacity || schedule.penalty_alpha == 0.0 || raw_gas == 0) {
        return raw_gas;
    }
    const long double excess = static_cast<long double>(cumulative - schedule.daily_capacity) /
                               static_cast<long double>(schedule.daily_capacity);
    const long double extra = static_cast<long double>(raw_gas) * schedule.penalty_alpha * excess * excess;
    return raw_gas + static_cast<std::uint64_t>(std::ceil(extra));
}

}  // namespace hybridsettle::ledger
