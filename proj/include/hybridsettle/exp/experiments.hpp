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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <hybridsettle/config.hpp>
#include <hybridsettle/crypto/bigint.hpp>
#include <hybridsettle/ledger/gas.hpp>
#include <hybridsettle/ledger/ledger.hpp>
#include <hybridsettle/workload/workload.hpp>

namespace hybridsettle::exp {

// 2048-bit modulus with no known factorization (the RSA-2048 challenge number).
extern const char* const kDefaultModulusDecimal;

struct ExpConfig {
    workload::WorkloadConfig workload;
    ledger::GasSchedule schedule;

    std::uint64_t exp1_records{200};
    std::uint64_t exp1_trials{30};

    std::vector<std::uint64_t> exp2_batch_sizes{1, 2, 4, 8, 16, 32, 64};
    std::uint64_t exp2_sweep_records{1024};

    std::vector<std::uint64_t> exp4_sizes{10, 50, 100};
    std::uint64_t exp4_repetitions{20};
    crypto::BigInt exp4_modulus;
    crypto::BigInt exp4_generator{3};

    std::uint64_t exp5_requests{20};
    std::uint64_t auth_window{300};

    [[nodiscard]] std::uint64_t seed() const noexcept { return workload.seed; }

    static ExpConfig defaults();
    // Unset keys keep their defaults. Throws ConfigError on invalid values.
    static ExpConfig from_config(const KeyValueConfig& config);
    // Every effective setting, defaults included.
    [[nodiscard]] KeyValueConfig effective() const;
    // keccak256 of the canonical effective configuration.
    [[nodiscard]] Digest32 digest() const;
};

struct MetricRow {
    std::string name;
    std::string value;
    std::string unit;
};

struct Series {
    std::string name;  // written as series_<name>.csv
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Extra files copied verbatim into the experiment directory.
struct Artifact {
    std::string filename;
    std::string content;
};

struct ExpResult {
    int id{0};
    std::string title;
    std::vector<MetricRow> metrics;
    std::vector<Series> series;
    std::vector<Artifact> artifacts;
    std::vector<std::string> failures;  // empty iff every gate passed

    // Summary row.
    std::string headline_metric;
    std::string measured;
    std::string reported;

    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
    void metric(std::string name, std::string value, std::string unit = "");
    void check(bool ok, std::string failure);
};

ExpResult run_exp1(const ExpConfig& config);
ExpResult run_exp2(const ExpConfig& config);
ExpResult run_exp3(const ExpConfig& config);
ExpResult run_exp4(const ExpConfig& config);
ExpResult run_exp5(const ExpConfig& config);
ExpResult run_exp(int id, const ExpConfig& config);

struct Summary {
    std::vector<ExpResult> results;
    [[nodiscard]] bool passed() const noexcept;
};

Summary run_all(const ExpConfig& config);

// Writes expN/metrics.csv, expN/series_*.csv and artifacts under `out`.
void write_result(const std::filesystem::path& out, const ExpResult& result, const ExpConfig& config,
                  bool emit_plots = false);
// Writes summary.csv under `out`.
void write_summary(const std::filesystem::path& out, const Summary& summary, const ExpConfig& config);

// Receipts as CSV with reproducibility comment lines.
std::string receipt_log(const std::vector<ledger::TxReceipt>& receipts, const ExpConfig& config);

}  // namespace hybridsettle::exp
