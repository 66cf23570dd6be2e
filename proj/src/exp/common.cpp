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

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::exp {

const char* const kDefaultModulusDecimal =
    "25195908475657893494027183240048398571429282126204032027777137836043662020707595556264018525880784406918290641"
    "24951508218929855914917618450280848912007284499268739280728777673597141834727026189637501497182469116507761337"
    "98590957000973304597488084284017974291006424586918171951187461215151726546322822168699875491824224336372590851"
    "41865462043576798423387184774447920739934236584823824281198163815010674810451660377306056201619676256133844143"
    "60383390441495263443219011465754445417842402092461651572335077870774981712577246796292638635637328991215483143"
    "8167899885040445364023527381951378636564391212010397122822120720357";

namespace {

    std::vector<std::uint64_t> parse_u64_list(const KeyValueConfig& config, std::string_view key,
                                              const std::vector<std::uint64_t>& fallback) {
        if (!config.contains(key)) return fallback;
        std::vector<std::uint64_t> out;
        for (const auto& item : config.get_list(key, {})) {
            try {
                std::size_t used = 0;
                const unsigned long long v = std::stoull(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                out.push_back(v);
            } catch (const std::exception&) {
                throw ConfigError(fmt::format("{}: not an unsigned integer list", key));
            }
        }
        return out;
    }

    std::string join_u64(const std::vector<std::uint64_t>& xs) {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
        return out;
    }

    std::string comment_header(const ExpConfig& config) {
        return fmt::format("# seed={}\n# config_digest={}\n", config.seed(), config.digest().hex());
    }

    std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    }

    std::string csv_line(const std::vector<std::string>& fields) {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
        return out + "\n";
    }

    void write_file(const std::filesystem::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << content;
    }

    // gnuplot scripts for the series that have a natural x axis.
    std::string plot_script(const Series& s) {
        std::string cols;
        for (std::size_t i = 1; i < s.header.size(); ++i) {
            cols += fmt::format("{}'series_{}.csv' using 1:{} with linespoints title '{}'", i > 1 ? ", " : "", s.name,
                                i + 1, s.header[i]);
        }
        return fmt::format(
            "set datafile separator ','\nset datafile commentschars '#'\nset key autotitle columnhead\n"
            "set terminal pngcairo size 900,600\nset output 'series_{}.png'\nset xlabel '{}'\nplot {}\n",
            s.name, s.header.empty() ? "" : s.header[0], cols);
    }

}  // namespace

ExpConfig ExpConfig::defaults() {
    ExpConfig c;
    c.workload = workload::WorkloadConfig::defaults();
    c.exp4_modulus = crypto::parse_bigint(kDefaultModulusDecimal);
    return c;
}

ExpConfig ExpConfig::from_config(const KeyValueConfig& config) {
    ExpConfig c = defaults();
    c.workload = workload::WorkloadConfig::from_config(config);
    c.schedule = ledger::GasSchedule::from_config(config);
    c.exp1_records = config.get_u64("exp1.records", c.exp1_records);
    c.exp1_trials = config.get_u64("exp1.trials", c.exp1_trials);
    c.exp2_batch_sizes = parse_u64_list(config, "exp2.batch_sizes", c.exp2_batch_sizes);
    c.exp2_sweep_records = config.get_u64("exp2.sweep_records", c.exp2_sweep_records);
    c.exp4_sizes = parse_u64_list(config, "exp4.sizes", c.exp4_sizes);
    c.exp4_repetitions = config.get_u64("exp4.repetitions", c.exp4_repetitions);
    if (const auto m = config.get("exp4.modulus")) c.exp4_modulus = crypto::parse_bigint(*m);
    if (const auto g = config.get("exp4.generator")) c.exp4_generator = crypto::parse_bigint(*g);
    c.exp5_requests = config.get_u64("exp5.requests", c.exp5_requests);
    c.auth_window = config.get_u64("auth_window", c.auth_window);

    if (c.exp1_records == 0) throw ConfigError("exp1.records must be >= 1");
    if (c.exp2_batch_sizes.empty()) throw ConfigError("exp2.batch_sizes must not be empty");
    for (auto b : c.exp2_batch_sizes) {
        if (b == 0) throw ConfigError("exp2.batch_sizes entries must be >= 1");
    }
    if (c.exp2_sweep_records == 0) throw ConfigError("exp2.sweep_records must be >= 1");
    if (c.exp4_sizes.empty()) throw ConfigError("exp4.sizes must not be empty");
    for (auto s : c.exp4_sizes) {
        if (s == 0) throw ConfigError("exp4.sizes entries must be >= 1");
    }
    if (c.exp4_modulus < 3 || c.exp4_generator < 2 || c.exp4_generator >= c.exp4_modulus) {
        throw ConfigError("exp4 accumulator parameters");
    }
    return c;
}

KeyValueConfig ExpConfig::effective() const {
    KeyValueConfig kv;
    workload.store(kv);
    for (const auto& [k, v] : schedule.entries()) kv.set("gas." + k, v);
    kv.set("exp1.records", std::to_string(exp1_records));
    kv.set("exp1.trials", std::to_string(exp1_trials));
    kv.set("exp2.batch_sizes", join_u64(exp2_batch_sizes));
    kv.set("exp2.sweep_records", std::to_string(exp2_sweep_records));
    kv.set("exp4.sizes", join_u64(exp4_sizes));
    kv.set("exp4.repetitions", std::to_string(exp4_repetitions));
    kv.set("exp4.modulus", exp4_modulus.get_str());
    kv.set("exp4.generator", exp4_generator.get_str());
    kv.set("exp5.requests", std::to_string(exp5_requests));
    kv.set("auth_window", std::to_string(auth_window));
    return kv;
}

Digest32 ExpConfig::digest() const { return crypto::keccak256(effective().canonical()); }

void ExpResult::metric(std::string name, std::string value, std::string unit) {
    metrics.push_back({std::move(name), std::move(value), std::move(unit)});
}

void ExpResult::check(bool ok, std::string failure) {
    if (!ok) failures.push_back(std::move(failure));
}

ExpResult run_exp(int id, const ExpConfig& config) {
    switch (id) {
        case 1: return run_exp1(config);
        case 2: return run_exp2(config);
        case 3: return run_exp3(config);
        case 4: return run_exp4(config);
        case 5: return run_exp5(config);
        default: throw std::invalid_argument(fmt::format("no experiment {}", id));
    }
}

bool Summary::passed() const noexcept {
    for (const auto& r : results) {
        if (!r.passed()) return false;
    }
    return true;
}

Summary run_all(const ExpConfig& config) {
    Summary s;
    for (int id = 1; id <= 5; ++id) s.results.push_back(run_exp(id, config));
    return s;
}

std::string receipt_log(const std::vector<ledger::TxReceipt>& receipts, const ExpConfig& config) {
    std::ostringstream out;
    out << comment_header(config);
    ledger::write_receipt_log(out, receipts);
    return out.str();
}

void write_result(const std::filesystem::path& out, const ExpResult& result, const ExpConfig& config,
                  bool emit_plots) {
    const auto dir = out / fmt::format("exp{}", result.id);
    std::filesystem::create_directories(dir);
    std::string metrics = comment_header(config);
    metrics += fmt::format("# gas_schedule={}\n", config.schedule.echo());
    metrics += "name,value,unit\n";
    for (const auto& m : result.metrics) metrics += csv_line({m.name, m.value, m.unit});
    metrics += csv_line({"gates_passed", result.passed() ? "true" : "false", ""});
    for (const auto& f : result.failures) metrics += csv_line({"failure", f, ""});
    write_file(dir / "metrics.csv", metrics);
    for (const auto& s : result.series) {
        std::string body = comment_header(config) + csv_line(s.header);
        for (const auto& row : s.rows) body += csv_line(row);
        write_file(dir / fmt::format("series_{}.csv", s.name), body);
        if (emit_plots) write_file(dir / fmt::format("plot_{}.gp", s.name), plot_script(s));
    }
    for (const auto& a : result.artifacts) write_file(dir / a.filename, a.content);
}

void write_summary(const std::filesystem::path& out, const Summary& summary, const ExpConfig& config) {
    std::filesystem::create_directories(out);
    std::string body = comment_header(config);
    body += fmt::format("# gas_schedule={}\n", config.schedule.echo());
    body += "experiment,title,metric,measured,reported,passed\n";
    for (const auto& r : summary.results) {
        body += csv_line({fmt::format("exp{}", r.id), r.title, r.headline_metric, r.measured, r.reported,
                          r.passed() ? "true" : "false"});
    }
    write_file(out / "summary.csv", body);
}

}  // namespace hybridsettle::exp
