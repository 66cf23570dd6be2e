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

#include <algorithm>

#include <fmt/format.h>

#include <hybridsettle/contracts/deploy.hpp>
#include <hybridsettle/crypto/accumulator.hpp>
#include <hybridsettle/crypto/prime.hpp>
#include <hybridsettle/offchain/witnesses.hpp>

namespace hybridsettle::exp {

namespace {

    crypto::BigInt member_prime(std::uint64_t seed, std::string_view label, std::uint64_t size, std::uint64_t i) {
        Bytes pre;
        append_u64_be(pre, seed);
        append(pre, as_bytes(label));
        append_u64_be(pre, size);
        append_u64_be(pre, i);
        return crypto::hash_to_prime(pre);
    }

}  // namespace

ExpResult run_exp4(const ExpConfig& config) {
    ExpResult result;
    result.id = 4;
    result.title = "accumulator verification cost";
    result.headline_metric = "verify gas variation across set sizes";
    result.reported = "below 1%";

    const ledger::AccountId gov = "governance";
    const ledger::AccountId client = "membership-client";
    ledger::Ledger ledger{config.schedule, gov};
    contracts::deploy_all(ledger, config.auth_window);
    const std::size_t setup = ledger.receipts().size();
    const crypto::AccumulatorParams params{config.exp4_modulus, config.exp4_generator};
    auto rng = workload::make_rng(config.seed(), "exp4");

    Series runs{"verifications", {"set_size", "repetition", "probe", "result", "gas_used"}, {}};
    Series sizes{"gas_by_size", {"set_size", "min_gas", "max_gas", "member_checks", "probe_gas"}, {}};
    std::uint64_t global_min = ~std::uint64_t{0};
    std::uint64_t global_max = 0;
    std::uint64_t failures = 0;
    std::uint64_t total_checks = 0;

    for (const std::uint64_t n : config.exp4_sizes) {
        crypto::AccumulatorState state = crypto::acc_empty(params);
        std::vector<crypto::BigInt> members;
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto p = member_prime(config.seed(), "exp4-member", n, i);
            state = crypto::acc_add(state, p);
            members.push_back(p);
        }
        // Off-chain and unmetered.
        const auto witnesses = offchain::maintain_witnesses(state);
        const auto& set = ledger.execute_tx(gov, contracts::accver::set_state(state.value, params.modulus,
                                                                               params.generator));
        result.check(set.ok(), fmt::format("size {}: set_state reverted", n));

        std::uint64_t lo = ~std::uint64_t{0};
        std::uint64_t hi = 0;
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        for (std::uint64_t rep = 0; rep < config.exp4_repetitions; ++rep) {
            const auto& p = members[pick(rng)];
            const auto& w = witnesses.at(p);
            const auto& r = ledger.execute_tx(client, contracts::accver::verify_membership(w.value, p, params.modulus));
            const bool member = r.ok() && contracts::accver::decode_result(r.output);
            if (!member || !crypto::acc_verify(state.value, w.value, p, params.modulus)) ++failures;
            lo = std::min(lo, r.gas_used);
            hi = std::max(hi, r.gas_used);
            ++total_checks;
            runs.rows.push_back({std::to_string(n), std::to_string(rep), "member", member ? "true" : "false",
                                 std::to_string(r.gas_used)});
        }

        // Non-member probe: a fresh prime presented with a real member's witness.
        const auto outsider = member_prime(config.seed(), "exp4-probe", n, 0);
        const auto& borrowed = witnesses.at(members.front());
        const auto& probe =
            ledger.execute_tx(client, contracts::accver::verify_membership(borrowed.value, outsider, params.modulus));
        const bool accepted = probe.ok() && contracts::accver::decode_result(probe.output);
        result.check(probe.ok() && !accepted, fmt::format("size {}: non-member probe accepted", n));
        result.check(probe.gas_used == hi && probe.gas_used == lo,
                     fmt::format("size {}: probe gas {} differs from member checks", n, probe.gas_used));
        runs.rows.push_back({std::to_string(n), "0", "non_member", accepted ? "true" : "false",
                             std::to_string(probe.gas_used)});

        sizes.rows.push_back({std::to_string(n), std::to_string(lo), std::to_string(hi),
                              std::to_string(config.exp4_repetitions), std::to_string(probe.gas_used)});
        global_min = std::min(global_min, lo);
        global_max = std::max(global_max, hi);
    }
    result.series.push_back(std::move(runs));
    result.series.push_back(std::move(sizes));

    const double variation =
        total_checks == 0 ? 0.0
                          : static_cast<double>(global_max - global_min) / static_cast<double>(global_min) * 100.0;
    result.check(failures == 0, fmt::format("{} member verifications failed", failures));
    result.check(config.exp4_repetitions >= 20, "fewer than 20 repetitions per size");
    result.check(total_checks > 0 && global_min == global_max,
                 fmt::format("verify gas varies across sizes: {}..{}", global_min, global_max));
    result.metric("modulus_bits", std::to_string(mpz_sizeinbase(config.exp4_modulus.get_mpz_t(), 2)), "bits");
    result.metric("repetitions_per_size", std::to_string(config.exp4_repetitions));
    result.metric("verify_gas", std::to_string(global_max), "gas");
    result.metric("max_relative_variation", fmt::format("{:.4f}", variation), "percent");
    result.metric("failed_verifications", std::to_string(failures));
    result.metric("final_state_digest", ledger.state_digest().hex());

    const std::vector<ledger::TxReceipt> receipts(ledger.receipts().begin() + static_cast<std::ptrdiff_t>(setup),
                                                  ledger.receipts().end());
    result.artifacts.push_back({"receipts.csv", receipt_log(receipts, config)});
    result.measured = fmt::format("{:.4f}% ({} gas per check)", variation, global_max);
    return result;
}

}  // namespace hybridsettle::exp
