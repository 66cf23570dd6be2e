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

#include <hybridsettle/exp/schemes.hpp>

#include <hybridsettle/contracts/deploy.hpp>
#include <hybridsettle/contracts/storage.hpp>
#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::exp {

using ledger::ExecContext;
using ledger::WordReader;
using ledger::WordWriter;

namespace {

    constexpr std::uint64_t kMaxBulkRecords = 4096;

}  // namespace

std::string_view scheme_name(SchemeKind kind) noexcept {
    return kind == SchemeKind::Baseline ? "baseline" : "proposed";
}

void BulkSettlement::execute(std::string_view operation, WordReader& args, ExecContext& ctx) const {
    if (operation != "submit") {
        ExecContext::revert("unknown target");
    }
    const Bytes32 batch_id = args.word();
    const std::uint64_t count = args.u64();
    if (count == 0 || count > kMaxBulkRecords) {
        ExecContext::revert("invalid batch");
    }
    std::vector<offchain::SettlementRecord> records;
    records.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Bytes encoded;
        for (std::size_t w = 0; w < offchain::kRecordWords; ++w) append(encoded, args.word().view());
        try {
            records.push_back(offchain::decode_record(encoded));
        } catch (const offchain::RecordError&) {
            ExecContext::revert("invalid record");
        }
    }
    if (ctx.role_mask(ctx.caller()) == 0) {
        ExecContext::revert("unauthorized");
    }
    const Bytes32 header_slot = ctx.slot("batch", batch_id.view(), 0);
    if (!ctx.load(header_slot).is_zero()) {
        ExecContext::revert("batch exists");
    }
    ctx.store(header_slot, contracts::pack_u64s({1, count, ctx.clock()}));
    ctx.store(ctx.slot("batch", batch_id.view(), 1), Bytes32::right_padded(ctx.caller()));
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto& r = records[i];
        Bytes32 ids = Bytes32::right_padded(r.region);
        std::copy(r.participant_id.begin(), r.participant_id.end(), ids.data() + 16);
        ctx.store(ctx.slot("rec", batch_id.view(), 2 * i), ids);
        ctx.store(ctx.slot("rec", batch_id.view(), 2 * i + 1),
                  contracts::pack_u64s({r.timestamp, static_cast<std::uint64_t>(r.tx_type), r.energy_kwh,
                                        r.price_milli}));
        ctx.emit("RecordStored", offchain::encode_record(r));
    }
}

namespace bulk {

    ledger::Call submit(const Bytes32& batch_id, std::span<const offchain::SettlementRecord> records) {
        WordWriter w;
        w.word(batch_id).u64(records.size());
        Bytes args = std::move(w).take();
        for (const auto& r : records) append(args, offchain::encode_record(r));
        return {std::string(kBulkSettlement), "submit", std::move(args)};
    }

}  // namespace bulk

ledger::Ledger make_settlement_ledger(const ledger::GasSchedule& schedule, const ledger::AccountId& operator_account) {
    ledger::Ledger ledger{schedule, "governance"};
    contracts::deploy_all(ledger);
    ledger.deploy(std::make_shared<BulkSettlement>());
    ledger.execute_tx("governance", ledger::grant_role(operator_account, ledger::Role::Prosumer));
    return ledger;
}

ledger::Call verification_call(const offchain::SettlementRecord& record, std::uint64_t sequence) {
    Bytes pre;
    append(pre, as_bytes("order"));
    append_u64_be(pre, sequence);
    append(pre, offchain::build_digest(record).view());
    const Bytes32 order_id = crypto::keccak256(pre);
    const auto side =
        record.tx_type == offchain::TxType::Buy ? contracts::Side::Buy : contracts::Side::Sell;
    return contracts::trading::place_order(order_id, side, record.energy_kwh, record.price_milli, record.region);
}

ledger::Call submission_call(SchemeKind kind, const offchain::Batch& batch) {
    if (kind == SchemeKind::Baseline) return bulk::submit(batch.batch_id, batch.records);
    return contracts::verifier::commit(batch.batch_id, contracts::CommitmentKind::BatchRoot, batch.root,
                                       batch.records.size());
}

}  // namespace hybridsettle::exp
