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
#include <span>
#include <string_view>

#include <hybridsettle/ledger/ledger.hpp>
#include <hybridsettle/offchain/records.hpp>

namespace hybridsettle::exp {

enum class SchemeKind : std::uint8_t { Baseline, Proposed };

std::string_view scheme_name(SchemeKind kind) noexcept;

// Baseline submission target: stores every record field on chain.
inline constexpr std::string_view kBulkSettlement = "bulk";

// Per record: two packed slots and one event carrying the full encoding.
// Per batch: a header slot and a submitter slot.
class BulkSettlement final : public ledger::Contract {
  public:
    [[nodiscard]] std::string_view name() const noexcept override { return kBulkSettlement; }
    void execute(std::string_view operation, ledger::WordReader& args, ledger::ExecContext& ctx) const override;
};

namespace bulk {
    ledger::Call submit(const Bytes32& batch_id, std::span<const offchain::SettlementRecord> records);
}

// Ledger with every contract deployed and `operator_account` holding the
// prosumer role.
ledger::Ledger make_settlement_ledger(const ledger::GasSchedule& schedule, const ledger::AccountId& operator_account);

// Shared verification path: one order placement per record.
ledger::Call verification_call(const offchain::SettlementRecord& record, std::uint64_t sequence);

// Submission for one batch under `kind`.
ledger::Call submission_call(SchemeKind kind, const offchain::Batch& batch);

}  // namespace hybridsettle::exp
