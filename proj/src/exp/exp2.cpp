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

#include <fmt/format.h>

#include <hybridsettle/exp/schemes.hpp>

namespace hybridsettle::exp {

namespace {

    constexpr std::uint64_t kSecondsPerHour = 3600;

    struct DayRun {
        std::vector<std::uint64_t> hour_gas;
        std::vector<std::uint64_t> hour_tx;
        std::vector<std::uint64_t> hour_records;
        std::vector<std::uint64_t> hour_cumulative;  // daily counter after the hour's last tx
        std::vector<bool> hour_penalized;            // some tx in the hour ran above capacity
        std::uint64_t verification_gas{0};
        std::uint64_t submission_gas{0};
        std::uint64_t batches{0};
        std::uint64_t reverted{0};
        std::vector<ledger::TxReceipt> receipts;
        Digest32 final_digest;

        [[nodiscard]] std::uint64_t total() const { return verification_gas + submission_gas; }
    };

    DayRun run_day(const ExpConfig& config, SchemeKind kind, const ledger::GasSchedule& schedule,
                   const std::vector<workload::TimedRecord>& stream) {
        const ledger::AccountId op = "operator";
        auto ledger = make_settlement_ledger(schedule, op);
        const std::size_t setup = ledger.receipts().size();
        const std::uint64_t hours = config.workload.hours;
        DayRun run;
        run.hour_gas.assign(hours, 0);
        run.hour_tx.assign(hours, 0);
        run.hour_records.assign(hours, 0);
        run.hour_cumulative.assign(hours, 0);
        run.hour_penalized.assign(hours, false);

        auto account = [&](const ledger::TxReceipt& r, bool submission) {
            const std::uint64_t h = std::min<std::uint64_t>(r.clock / kSecondsPerHour, hours - 1);
            run.hour_gas[h] += r.gas_used;
            run.hour_tx[h] += 1;
            run.hour_cumulative[h] = ledger.cumulative_tx_today();
            if (ledger.cumulative_tx_today() > schedule.daily_capacity) run.hour_penalized[h] = true;
            (submission ? run.submission_gas : run.verification_gas) += r.gas_used;
            if (!r.ok()) ++run.reverted;
        };

        std::vector<offchain::SettlementRecord> pending;
        std::uint64_t pending_hour = 0;
        std::uint64_t sequence = 0;
        auto flush = [&] {
            if (pending.empty()) return;
            const auto batch = offchain::build_batch(pending, sequence++);
            account(ledger.execute_tx(op, submission_call(kind, batch)), true);
            ++run.batches;
            pending.clear();
        };

        std::uint64_t index = 0;
        for (const auto& tr : stream) {
            const std::uint64_t hour = tr.clock / kSecondsPerHour;
            if (!pending.empty() && hour != pending_hour) flush();
            ledger.advance_to(tr.clock);
            account(ledger.execute_tx(op, verification_call(tr.record, index++)), false);
            run.hour_records[std::min<std::uint64_t>(hour, hours - 1)] += 1;
            pending_hour = hour;
            pending.push_back(tr.record);
            if (pending.size() >= workload::batch_size_for(config.workload.rate_for_hour(hour), config.workload)) {
                flush();
            }
        }
        flush();
        run.receipts.assign(ledger.receipts().begin() + static_cast<std::ptrdiff_t>(setup), ledger.receipts().end());
        run.final_digest = ledger.state_digest();
        return run;
    }

    // Gas per record with fixed-size batches over `records`, all at one clock.
    double amortized(SchemeKind kind, const ledger::GasSchedule& schedule,
                     const std::vector<offchain::SettlementRecord>& records, std::uint64_t batch_size,
                     std::uint64_t& reverted) {
        const ledger::AccountId op = "operator";
        auto ledger = make_settlement_ledger(schedule, op);
        std::uint64_t gas = 0;
        std::uint64_t sequence = 0;
        for (std::size_t start = 0; start < records.size(); start += batch_size) {
            const std::size_t end = std::min(records.size(), start + batch_size);
            for (std::size_t i = start; i < end; ++i) {
                const auto& r = ledger.execute_tx(op, verification_call(records[i], i));
                gas += r.gas_used;
                reverted += r.ok() ? 0 : 1;
            }
            const auto batch = offchain::build_batch(
                std::span<const offchain::SettlementRecord>(records).subspan(start, end - start), sequence++);
            const auto& r = ledger.execute_tx(op, submission_call(kind, batch));
            gas += r.gas_used;
            reverted += r.ok() ? 0 : 1;
        }
        return static_cast<double>(gas) / static_cast<double>(records.size());
    }

    std::string per(std::uint64_t gas, std::uint64_t n) {
        return n == 0 ? "0" : fmt::format("{:.3f}", static_cast<double>(gas) / static_cast<double>(n));
    }

    double ratio(std::uint64_t a, std::uint64_t b) {
        return b == 0 ? 1.0 : static_cast<double>(a) / static_cast<double>(b);
    }

}  // namespace

ExpResult run_exp2(const ExpConfig& config) {
    ExpResult result;
    result.id = 2;
    result.title = "gas cost and scalability";
    result.headline_metric = "24h cumulative gas reduction";
    result.reported = "approximately 39%";

    const auto stream = workload::gen_energy_stream(config.workload);

    // Fig. 3: amortized gas against batch size on a fresh ledger.
    std::vector<offchain::SettlementRecord> sweep_records;
    for (const auto& tr : stream) {
        if (sweep_records.size() == config.exp2_sweep_records) break;
        sweep_records.push_back(tr.record);
    }
    result.check(sweep_records.size() == config.exp2_sweep_records,
                 fmt::format("stream has only {} records for the batch sweep", sweep_records.size()));
    Series fig3{"fig3_amortized", {"batch_size", "baseline_gas_per_record", "proposed_gas_per_record"}, {}};
    std::uint64_t sweep_reverted = 0;
    std::vector<std::pair<double, double>> sweep;
    if (!sweep_records.empty()) {
        for (const auto b : config.exp2_batch_sizes) {
            const double base = amortized(SchemeKind::Baseline, config.schedule, sweep_records, b, sweep_reverted);
            const double prop = amortized(SchemeKind::Proposed, config.schedule, sweep_records, b, sweep_reverted);
            sweep.emplace_back(base, prop);
            fig3.rows.push_back({std::to_string(b), fmt::format("{:.3f}", base), fmt::format("{:.3f}", prop)});
            result.check(prop < base, fmt::format("batch size {}: proposed {:.3f} not below baseline {:.3f}", b, prop,
                                                  base));
        }
        for (std::size_t i = 1; i < sweep.size(); ++i) {
            const auto b0 = config.exp2_batch_sizes[i - 1];
            const auto b1 = config.exp2_batch_sizes[i];
            if (b1 <= b0) continue;
            result.check(sweep[i].first < sweep[i - 1].first,
                         fmt::format("baseline amortized gas not decreasing from b={} to b={}", b0, b1));
            result.check(sweep[i].second < sweep[i - 1].second,
                         fmt::format("proposed amortized gas not decreasing from b={} to b={}", b0, b1));
        }
    }
    result.check(sweep_reverted == 0, fmt::format("{} sweep transactions reverted", sweep_reverted));
    result.series.push_back(std::move(fig3));

    // Fig. 4 and 5: the full day, plus an unpenalized counterfactual for each scheme.
    ledger::GasSchedule flat = config.schedule;
    flat.penalty_alpha = 0.0;
    const DayRun base = run_day(config, SchemeKind::Baseline, config.schedule, stream);
    const DayRun prop = run_day(config, SchemeKind::Proposed, config.schedule, stream);
    const DayRun base_flat = run_day(config, SchemeKind::Baseline, flat, stream);
    const DayRun prop_flat = run_day(config, SchemeKind::Proposed, flat, stream);
    result.check(base.reverted + prop.reverted == 0,
                 fmt::format("{} workload transactions reverted", base.reverted + prop.reverted));

    const std::uint64_t hours = config.workload.hours;
    Series fig4{"fig4_hourly", {"hour", "records", "transactions", "baseline_gas", "proposed_gas"}, {}};
    Series fig5{"fig5_per_tx",
                {"hour", "cumulative_tx", "baseline_gas_per_tx", "proposed_gas_per_tx", "baseline_unpenalized_per_tx",
                 "proposed_unpenalized_per_tx", "baseline_multiplier", "proposed_multiplier"},
                {}};
    std::int64_t crossing_hour = -1;
    double prev_base_mult = 0.0;
    double prev_prop_mult = 0.0;
    std::uint64_t prev_day = ~std::uint64_t{0};
    for (std::uint64_t h = 0; h < hours; ++h) {
        fig4.rows.push_back({std::to_string(h), std::to_string(base.hour_records[h]), std::to_string(base.hour_tx[h]),
                             std::to_string(base.hour_gas[h]), std::to_string(prop.hour_gas[h])});
        result.check(prop.hour_gas[h] < base.hour_gas[h],
                     fmt::format("hour {}: proposed {} not below baseline {}", h, prop.hour_gas[h], base.hour_gas[h]));

        const double base_mult = ratio(base.hour_gas[h], base_flat.hour_gas[h]);
        const double prop_mult = ratio(prop.hour_gas[h], prop_flat.hour_gas[h]);
        fig5.rows.push_back({std::to_string(h), std::to_string(base.hour_cumulative[h]),
                             per(base.hour_gas[h], base.hour_tx[h]), per(prop.hour_gas[h], prop.hour_tx[h]),
                             per(base_flat.hour_gas[h], base_flat.hour_tx[h]),
                             per(prop_flat.hour_gas[h], prop_flat.hour_tx[h]), fmt::format("{:.6f}", base_mult),
                             fmt::format("{:.6f}", prop_mult)});

        const std::uint64_t day = h / 24;
        if (day != prev_day) {
            prev_base_mult = 0.0;
            prev_prop_mult = 0.0;
            prev_day = day;
        }
        if (base.hour_penalized[h]) {
            if (crossing_hour < 0) crossing_hour = static_cast<std::int64_t>(h);
            result.check(base.hour_gas[h] > base_flat.hour_gas[h] && prop.hour_gas[h] > prop_flat.hour_gas[h],
                         fmt::format("hour {}: penalty did not raise gas", h));
            result.check(base_mult > prev_base_mult && prop_mult > prev_prop_mult,
                         fmt::format("hour {}: per-tx penalty multiplier not increasing", h));
            prev_base_mult = base_mult;
            prev_prop_mult = prop_mult;
        } else {
            result.check(base.hour_gas[h] == base_flat.hour_gas[h] && prop.hour_gas[h] == prop_flat.hour_gas[h],
                         fmt::format("hour {}: penalty applied below capacity", h));
        }
    }
    result.series.push_back(std::move(fig4));
    result.series.push_back(std::move(fig5));

    const double reduction = 1.0 - static_cast<double>(prop.total()) / static_cast<double>(base.total());
    std::uint64_t records = 0;
    for (auto n : base.hour_records) records += n;
    result.metric("records", std::to_string(records));
    result.metric("transactions", std::to_string(base.receipts.size()));
    result.metric("batches", std::to_string(base.batches));
    result.metric("mean_batch_size", per(records, base.batches), "records");
    result.metric("daily_capacity", std::to_string(config.schedule.daily_capacity), "tx");
    result.metric("capacity_crossing_hour", std::to_string(crossing_hour));
    result.metric("baseline_total_gas", std::to_string(base.total()), "gas");
    result.metric("proposed_total_gas", std::to_string(prop.total()), "gas");
    result.metric("verification_gas", std::to_string(base.verification_gas), "gas");
    result.metric("baseline_submission_gas", std::to_string(base.submission_gas), "gas");
    result.metric("proposed_submission_gas", std::to_string(prop.submission_gas), "gas");
    result.metric("baseline_unpenalized_gas", std::to_string(base_flat.total()), "gas");
    result.metric("proposed_unpenalized_gas", std::to_string(prop_flat.total()), "gas");
    result.metric("cumulative_reduction", fmt::format("{:.4f}", reduction * 100.0), "percent");
    result.metric("baseline_final_state_digest", base.final_digest.hex());
    result.metric("proposed_final_state_digest", prop.final_digest.hex());
    result.check(base.verification_gas == prop.verification_gas, "verification path differs between schemes");
    result.check(reduction >= 0.25 && reduction <= 0.55,
                 fmt::format("cumulative reduction {:.2f}% outside [25%, 55%]", reduction * 100.0));

    result.artifacts.push_back({"receipts_baseline.csv", receipt_log(base.receipts, config)});
    result.artifacts.push_back({"receipts_proposed.csv", receipt_log(prop.receipts, config)});
    result.measured = fmt::format("{:.2f}%", reduction * 100.0);
    return result;
}

}  // namespace hybridsettle::exp
