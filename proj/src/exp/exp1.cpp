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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <fmt/format.h>

#include <hybridsettle/contracts/verifier.hpp>
#include <hybridsettle/crypto/keccak.hpp>
#include <hybridsettle/exp/schemes.hpp>
#include <hybridsettle/offchain/audit.hpp>
#include <hybridsettle/offchain/record_store.hpp>

namespace hybridsettle::exp {

namespace {

    std::string slurp(const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    Bytes32 commitment_id_for(std::uint64_t index) {
        Bytes pre;
        append(pre, as_bytes("exp1-record"));
        append_u64_be(pre, index);
        return crypto::keccak256(pre);
    }

}  // namespace

ExpResult run_exp1(const ExpConfig& config) {
    ExpResult result;
    result.id = 1;
    result.title = "settlement integrity and replayable audit";
    result.headline_metric = "tamper detection";
    result.reported = "100% (180/180)";

    const ledger::AccountId op = "operator";
    const ledger::AccountId auditor = "auditor";
    auto ledger = make_settlement_ledger(config.schedule, op);

    auto stream = workload::gen_energy_stream(config.workload);
    std::vector<offchain::SettlementRecord> records;
    for (const auto& tr : stream) {
        if (records.size() == config.exp1_records) break;
        records.push_back(tr.record);
    }
    // A sparse profile may yield fewer arrivals than requested; top up deterministically.
    auto top_up = workload::make_rng(config.seed(), "exp1-fill");
    const auto pool = workload::participant_pool(config.seed(), config.workload.participants);
    while (records.size() < config.exp1_records) {
        offchain::SettlementRecord r;
        r.timestamp = records.size();
        r.participant_id = pool[top_up() % pool.size()];
        r.energy_kwh = config.workload.energy_min;
        r.price_milli = 1 + top_up() % 100;
        r.region = config.workload.regions.front();
        records.push_back(r);
    }

    offchain::StoreManifest manifest;
    manifest.seed = config.seed();
    manifest.config_digest = config.digest();
    std::uint64_t commit_failures = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Bytes32 id = commitment_id_for(i);
        const auto& receipt = ledger.execute_tx(
            op, contracts::verifier::commit(id, contracts::CommitmentKind::SingleDigest,
                                            offchain::build_digest(records[i]), 1));
        if (!receipt.ok()) ++commit_failures;
        manifest.mapping.push_back(offchain::SingleAnchor{id});
    }
    result.check(commit_failures == 0, fmt::format("{} commitments reverted", commit_failures));

    // Round trip through the on-disk record store so the audit replays from files only.
    const auto scratch = std::filesystem::temp_directory_path() /
                         fmt::format("hybridsettle-exp1-{}-{}", config.digest().hex().substr(0, 16), ::getpid());
    std::filesystem::create_directories(scratch);
    const auto base = scratch / "records";
    offchain::write_record_store(base, records, manifest);
    const auto store = offchain::read_record_store(base);
    result.artifacts.push_back({"records.log", slurp(base.string() + ".log")});
    result.artifacts.push_back({"records.manifest", slurp(base.string() + ".manifest")});
    std::filesystem::remove_all(scratch);

    result.check(store.records == records, "record store round trip altered records");
    const auto report = offchain::replay_audit(store.records, store.manifest.mapping, ledger, auditor);
    std::ostringstream audit_csv;
    report.write_csv(audit_csv);
    result.artifacts.push_back({"audit.csv", audit_csv.str()});

    result.metric("records_committed", std::to_string(records.size()));
    result.metric("replay_matched", std::to_string(report.matched));
    result.metric("replay_total", std::to_string(report.total));
    result.check(report.matched == report.total && report.clean(),
                 fmt::format("replay matched {}/{}", report.matched, report.total));

    auto rng = workload::make_rng(config.seed(), "tamper");
    std::uniform_int_distribution<std::size_t> pick(0, records.size() - 1);
    Series trials{"trials", {"trial", "field", "record_index", "stored", "computed", "detected"}, {}};
    std::uint64_t attempts = 0;
    std::uint64_t detected = 0;
    Series per_field{"fields", {"field", "trials", "detected"}, {}};
    for (const auto field : offchain::kAllFields) {
        std::uint64_t field_detected = 0;
        for (std::uint64_t t = 0; t < config.exp1_trials; ++t) {
            const std::size_t idx = pick(rng);
            const auto forged = offchain::tamper(records[idx], field, rng);
            const std::vector<offchain::SettlementRecord> one{forged};
            const std::vector<offchain::Anchor> anchor{manifest.mapping[idx]};
            const auto r = offchain::replay_audit(one, anchor, ledger, auditor);
            const bool caught = !r.clean();
            ++attempts;
            if (caught) {
                ++detected;
                ++field_detected;
            }
            const std::string stored = caught ? r.mismatched.front().stored.hex() : "";
            const std::string computed = caught ? r.mismatched.front().computed.hex() : "";
            trials.rows.push_back({std::to_string(attempts - 1), std::string(offchain::field_name(field)),
                                   std::to_string(idx), stored, computed, caught ? "true" : "false"});
        }
        per_field.rows.push_back({std::string(offchain::field_name(field)), std::to_string(config.exp1_trials),
                                  std::to_string(field_detected)});
    }
    result.series.push_back(std::move(trials));
    result.series.push_back(std::move(per_field));
    result.metric("tamper_attempts", std::to_string(attempts));
    result.metric("tamper_detected", std::to_string(detected));
    result.metric("false_negatives", std::to_string(attempts - detected));
    result.metric("final_state_digest", ledger.state_digest().hex());
    result.check(detected == attempts, fmt::format("{} tampered records not detected", attempts - detected));

    result.artifacts.push_back({"receipts.csv", receipt_log(ledger.receipts(), config)});
    result.measured = fmt::format("replay {}/{}; detected {}/{}", report.matched, report.total, detected, attempts);
    return result;
}

}  // namespace hybridsettle::exp
