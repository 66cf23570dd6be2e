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
#include <optional>
#include <string>

#include <hybridsettle/ledger/ledger.hpp>

namespace hybridsettle::contracts {

// Minimal order tuples and settlement linkage. Matching is exact:
// opposite sides, same region, equal quantity.
inline constexpr std::string_view kTrading = "trading";
inline constexpr std::size_t kMaxRegionLength = 16;

enum class Side : std::uint8_t { Buy = 0, Sell = 1 };
enum class OrderStatus : std::uint8_t { Open = 1, Settled = 2 };

struct Order {
    Bytes32 order_id;
    Side side{Side::Buy};
    OrderStatus status{OrderStatus::Open};
    std::uint64_t quantity_kwh{0};
    std::uint64_t price_milli{0};
    std::string region;
};

class EnergyTrading final : public ledger::Contract {
  public:
    [[nodiscard]] std::string_view name() const noexcept override { return kTrading; }
    void execute(std::string_view operation, ledger::WordReader& args, ledger::ExecContext& ctx) const override;
};

namespace trading {

    ledger::Call place_order(const Bytes32& order_id, Side side, std::uint64_t quantity_kwh,
                             std::uint64_t price_milli, std::string_view region);
    ledger::Call settle(const Bytes32& buy_order, const Bytes32& sell_order, const Bytes32& commitment_id);

    std::optional<Order> read_order(const ledger::ChainState& state, const Bytes32& order_id);

}  // namespace trading

}  // namespace hybridsettle::contracts
