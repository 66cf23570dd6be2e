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
#include <vector>

#include <hybridsettle/ledger/ledger.hpp>

namespace hybridsettle::contracts {

/// Carbon credit registry with lifecycle conservation.
///
/// An asset is a lineage: one registered total, split into per-owner
/// holdings by transfers. For every lineage the contract keeps
///
///     sum(available) + sum(retired) <= total
///
/// and rejects any transfer or retirement whose amount exceeds the caller's
/// available balance. Retired credits never return to circulation.
inline constexpr std::string_view kCarbon = "carbon";

struct CarbonHolding {
    ledger::AccountId owner;
    std::uint64_t available{0};
    std::uint64_t retired{0};

    friend bool operator==(const CarbonHolding&, const CarbonHolding&) = default;
};

struct CarbonAsset {
    Bytes32 asset_id;
    std::string asset_type;
    std::uint64_t total{0};
    std::uint64_t issuance_year{0};
    std::vector<CarbonHolding> holdings;  // registration owner first, then in order of first receipt

    [[nodiscard]] std::uint64_t available_sum() const noexcept;
    [[nodiscard]] std::uint64_t retired_sum() const noexcept;
    [[nodiscard]] bool conserved() const noexcept { return available_sum() + retired_sum() <= total; }
};

class CarbonAssetRegistry final : public ledger::Contract {
  public:
    [[nodiscard]] std::string_view name() const noexcept override { return kCarbon; }
    void execute(std::string_view operation, ledger::WordReader& args, ledger::ExecContext& ctx) const override;
};

namespace carbon {

    ledger::Call register_asset(const Bytes32& asset_id, std::string_view asset_type, std::uint64_t total,
                                std::uint64_t issuance_year, const ledger::AccountId& owner);
    ledger::Call transfer(const Bytes32& asset_id, const ledger::AccountId& to, std::uint64_t amount);
    ledger::Call retire(const Bytes32& asset_id, std::uint64_t amount);

    std::optional<CarbonAsset> read_asset(const ledger::ChainState& state, const Bytes32& asset_id);
    // All registered lineages in registration order.
    std::vector<CarbonAsset> read_all(const ledger::ChainState& state);

}  // namespace carbon

}  // namespace hybridsettle::contracts
