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

#include <hybridsettle/exp/experiments.hpp>

#include <map>

#include <fmt/format.h>

#include <hybridsettle/contracts/deploy.hpp>

namespace hybridsettle::exp {

namespace {

    std::string_view expected_reason(workload::Validity v) {
        switch (v) {
            case workload::Validity::OverTransfer:
            case workload::Validity::OverRetire: return "exceeds available";
            case workload::Validity::Unauthorized: return "unauthorized";
            case workload::Validity::Valid: break;
        }
        return "";
    }

}  // namespace

ExpResult run_exp3(const ExpConfig& config) {
    ExpResult result;
    result.id = 3;
    result.title = "carbon asset lifecycle";
    result.headline_metric = "invalid operations rejected";
    result.reported = "100% (30/30)";

    const auto script = workload::gen_carbon_script(workload::derive_seed(config.seed(), "carbon"), config.workload);
    ledger::Ledger ledger{config.schedule, "governance"};
    contracts::deploy_all(ledger, config.auth_window);
    ledger.execute_tx("governance", ledger::grant_role(script.authority, ledger::Role::Authority));
    for (const auto& h : script.holders) ledger.execute_tx("governance", ledger::grant_role(h, ledger::Role::Prosumer));
    const std::size_t setup = ledger.receipts().size();

    Series ops{"operations",
               {"step", "kind", "validity", "actor", "amount", "status", "revert_reason", "gas_used", "digest_unchanged",
                "conserved"},
               {}};
    std::uint64_t valid_total = 0, valid_ok = 0, invalid_total = 0, invalid_rejected = 0, digest_kept = 0;
    std::uint64_t conservation_checks = 0, conservation_failures = 0, retired_regressions = 0;
    std::map<Bytes32, std::map<ledger::AccountId, std::uint64_t>> retired_seen;

    for (std::size_t step = 0; step < script.ops.size(); ++step) {
        const auto& op = script.ops[step];
        const Digest32 before = ledger.state_digest();
        const auto& receipt = ledger.execute_tx(op.actor, op.call());
        const bool unchanged = ledger.state_digest() == before;

        if (op.validity == workload::Validity::Valid) {
            ++valid_total;
            if (receipt.ok()) ++valid_ok;
            result.check(receipt.ok(), fmt::format("step {}: valid {} reverted ({})", step,
                                                   workload::op_kind_name(op.kind),
                                                   receipt.revert_reason.value_or("")));
        } else {
            ++invalid_total;
            const bool rejected = !receipt.ok() && receipt.revert_reason == expected_reason(op.validity);
            if (rejected) ++invalid_rejected;
            if (!receipt.ok() && unchanged) ++digest_kept;
            result.check(rejected, fmt::format("step {}: {} {} not rejected as expected (status {}, reason '{}')", step,
                                               workload::validity_name(op.validity), workload::op_kind_name(op.kind),
                                               ledger::status_name(receipt.status),
                                               receipt.revert_reason.value_or("")));
            result.check(unchanged, fmt::format("step {}: state digest changed across a revert", step));
        }

        bool all_conserved = true;
        for (const auto& asset : contracts::carbon::read_all(ledger.state())) {
            ++conservation_checks;
            if (!asset.conserved()) {
                all_conserved = false;
                ++conservation_failures;
            }
            for (const auto& h : asset.holdings) {
                auto& seen = retired_seen[asset.asset_id][h.owner];
                if (h.retired < seen) ++retired_regressions;
                seen = h.retired;
            }
        }
        result.check(all_conserved, fmt::format("step {}: conservation violated", step));

        ops.rows.push_back({std::to_string(step), std::string(workload::op_kind_name(op.kind)),
                            std::string(workload::validity_name(op.validity)), op.actor, std::to_string(op.amount),
                            std::string(ledger::status_name(receipt.status)), receipt.revert_reason.value_or(""),
                            std::to_string(receipt.gas_used), unchanged ? "true" : "false",
                            all_conserved ? "true" : "false"});
    }
    result.series.push_back(std::move(ops));

    Series assets{"assets", {"asset_id", "asset_type", "issuance_year", "total", "available", "retired", "holders"}, {}};
    for (const auto& a : contracts::carbon::read_all(ledger.state())) {
        assets.rows.push_back({a.asset_id.hex(), a.asset_type, std::to_string(a.issuance_year), std::to_string(a.total),
                               std::to_string(a.available_sum()), std::to_string(a.retired_sum()),
                               std::to_string(a.holdings.size())});
    }
    result.series.push_back(std::move(assets));

    result.check(valid_total >= 100, fmt::format("only {} valid operations in the script", valid_total));
    result.check(retired_regressions == 0, "retired balance decreased");
    result.metric("valid_operations", std::to_string(valid_total));
    result.metric("valid_accepted", std::to_string(valid_ok));
    result.metric("invalid_operations", std::to_string(invalid_total));
    result.metric("invalid_rejected", std::to_string(invalid_rejected));
    result.metric("digest_unchanged_on_revert", std::to_string(digest_kept));
    result.metric("conservation_checks", std::to_string(conservation_checks));
    result.metric("conservation_failures", std::to_string(conservation_failures));
    result.metric("final_state_digest", ledger.state_digest().hex());

    const std::vector<ledger::TxReceipt> receipts(ledger.receipts().begin() + static_cast<std::ptrdiff_t>(setup),
                                                  ledger.receipts().end());
    result.artifacts.push_back({"receipts.csv", receipt_log(receipts, config)});
    result.measured = fmt::format("{}/{} rejected", invalid_rejected, invalid_total);
    return result;
}

}  // namespace hybridsettle::exp
