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

// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <hybridsettle/crypto/accumulator.hpp>
#include <hybridsettle/crypto/keccak.hpp>
#include <hybridsettle/crypto/merkle.hpp>
#include <hybridsettle/crypto/prime.hpp>
#include <hybridsettle/exp/experiments.hpp>

#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace hybridsettle;

namespace {

struct Outcome {
    bool ok{true};
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const exp::MetricRow* find_metric(const exp::ExpResult& r, std::string_view name) {
    for (const auto& m : r.metrics)
        if (m.name == name) return &m;
    return nullptr;
}

std::uint64_t metric_u64(const exp::ExpResult& r, std::string_view name) {
    const auto* m = find_metric(r, name);
    return m ? std::stoull(m->value) : ~std::uint64_t{0};
}

double metric_double(const exp::ExpResult& r, std::string_view name) {
    const auto* m = find_metric(r, name);
    return m ? std::stod(m->value) : -1.0;
}

const exp::Series* find_series(const exp::ExpResult& r, std::string_view name) {
    for (const auto& s : r.series)
        if (s.name == name) return &s;
    return nullptr;
}

std::size_t column(const exp::Series& s, std::string_view name) {
    for (std::size_t i = 0; i < s.header.size(); ++i)
        if (s.header[i] == name) return i;
    throw std::runtime_error("missing column " + std::string(name));
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1(const exp::ExpConfig& cfg, double& secs) {
    exp::ExpResult r;
    secs = timed([&] { r = exp::run_exp1(cfg); });
    Outcome o;
    o.require(metric_u64(r, "replay_total") == 200, "replay_total != 200");
    o.require(metric_u64(r, "replay_matched") == 200, "replay_matched != 200");
    o.require(metric_u64(r, "tamper_attempts") == 180, "tamper_attempts != 180");
    o.require(metric_u64(r, "tamper_detected") == 180, "tamper_detected != 180");
    o.require(metric_u64(r, "false_negatives") == 0, "false negatives present");
    const auto* fields = find_series(r, "fields");
    o.require(fields && fields->rows.size() == 6, "fields series missing");
    if (fields) {
        for (const auto& row : fields->rows) o.require(row[1] == "30" && row[2] == "30", "field " + row[0] + " not 30/30");
    }
    o.require(r.passed(), r.passed() ? "" : r.failures.front());
    o.require(secs < 10.0, "runtime over 10 s");
    o.detail = o.ok ? "200/200 replay, 180/180 tamper detected" : o.detail;
    return o;
}

Outcome criterion2(const exp::ExpResult& r, const exp::ExpConfig& cfg, double secs) {
    Outcome o;
    const auto* fig3 = find_series(r, "fig3_amortized");
    const auto* fig4 = find_series(r, "fig4_hourly");
    const auto* fig5 = find_series(r, "fig5_per_tx");
    o.require(fig3 && fig4 && fig5, "series missing");
    if (!o.ok) return o;

    std::vector<std::uint64_t> sizes;
    for (const auto& row : fig3->rows) sizes.push_back(std::stoull(row[0]));
    o.require(sizes == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32, 64}, "batch sizes differ from 1..64");
    for (std::size_t i = 0; i < fig3->rows.size(); ++i) {
        const double b = std::stod(fig3->rows[i][1]);
        const double p = std::stod(fig3->rows[i][2]);
        o.require(p < b, "proposed not below baseline at b=" + fig3->rows[i][0]);
        if (i) {
            o.require(b < std::stod(fig3->rows[i - 1][1]), "baseline amortized not decreasing at b=" + fig3->rows[i][0]);
            o.require(p < std::stod(fig3->rows[i - 1][2]), "proposed amortized not decreasing at b=" + fig3->rows[i][0]);
        }
    }
    o.require(fig4->rows.size() == 24, "hourly series does not have 24 rows");
    for (const auto& row : fig4->rows) {
        o.require(std::stoull(row[4]) < std::stoull(row[3]), "proposed not below baseline in hour " + row[0]);
    }

    // Past capacity, the per-tx multiplier over the unpenalized counterfactual must rise hour over hour.
    const auto cum = column(*fig5, "cumulative_tx");
    const auto bm = column(*fig5, "baseline_multiplier");
    const auto pm = column(*fig5, "proposed_multiplier");
    std::uint64_t prev_cum = 0;
    double prev_b = 0.0, prev_p = 0.0;
    int penalized = 0;
    for (const auto& row : fig5->rows) {
        const std::uint64_t c = std::stoull(row[cum]);
        const double b = std::stod(row[bm]);
        const double p = std::stod(row[pm]);
        if (c > cfg.schedule.daily_capacity) {
            ++penalized;
            o.require(b > prev_b && p > prev_p, "multiplier not strictly increasing in hour " + row[0]);
            o.require(b > 1.0 && p > 1.0, "no penalty in hour " + row[0]);
        } else {
            o.require(b == 1.0 && p == 1.0, "penalty below capacity in hour " + row[0]);
        }
        o.require(c >= prev_cum, "cumulative count regressed");
        prev_cum = c;
        prev_b = b;
        prev_p = p;
    }
    o.require(penalized > 0, "workload never crosses daily capacity");

    // Per-transaction: the penalty factor is strictly increasing in the cumulative count.
    for (std::uint64_t c = cfg.schedule.daily_capacity; c < cfg.schedule.daily_capacity + 5000; ++c) {
        if (ledger::capacity_penalty(c + 1, cfg.schedule) <= ledger::capacity_penalty(c, cfg.schedule)) {
            o.require(false, "penalty factor not increasing at tx " + std::to_string(c + 1));
            break;
        }
    }
    const std::uint64_t tx = metric_u64(r, "transactions");
    o.require(tx >= 10000, "fewer than 10^4 transactions per day");
    o.require(secs < 60.0, "runtime over 60 s");
    if (o.ok) {
        o.detail = std::to_string(tx) + " tx/day, crossing hour " + find_metric(r, "capacity_crossing_hour")->value +
                   ", " + std::to_string(penalized) + " penalized hours";
    }
    return o;
}

Outcome criterion3(const exp::ExpResult& r, const exp::ExpConfig& cfg) {
    Outcome o;
    const double base = static_cast<double>(metric_u64(r, "baseline_total_gas"));
    const double prop = static_cast<double>(metric_u64(r, "proposed_total_gas"));
    const double reduction = 100.0 * (1.0 - prop / base);
    o.require(std::abs(reduction - metric_double(r, "cumulative_reduction")) < 1e-3, "reported reduction inconsistent");
    o.require(reduction >= 25.0 && reduction <= 55.0, "reduction outside [25%, 55%]");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f%%", reduction);
    o.detail = std::string("reduction ") + buf + " (reported ~39%), schedule " + cfg.schedule.echo();
    if (!o.ok) o.detail = "reduction " + std::string(buf) + " outside [25%, 55%]";
    return o;
}

Outcome criterion4(const exp::ExpConfig& cfg, double& secs) {
    exp::ExpResult r;
    secs = timed([&] { r = exp::run_exp3(cfg); });
    Outcome o;
    o.require(metric_u64(r, "invalid_operations") == 30, "invalid_operations != 30");
    o.require(metric_u64(r, "invalid_rejected") == 30, "invalid_rejected != 30");
    o.require(metric_u64(r, "digest_unchanged_on_revert") == 30, "state changed on revert");
    o.require(metric_u64(r, "valid_accepted") >= 100, "fewer than 100 accepted operations");
    o.require(metric_u64(r, "valid_accepted") == metric_u64(r, "valid_operations"), "valid operation rejected");
    o.require(metric_u64(r, "conservation_failures") == 0, "conservation violated");
    const auto* ops = find_series(r, "operations");
    o.require(ops != nullptr, "operations series missing");
    if (ops) {
        const auto status = column(*ops, "status");
        const auto validity = column(*ops, "validity");
        const auto kept = column(*ops, "digest_unchanged");
        const auto conserved = column(*ops, "conserved");
        for (const auto& row : ops->rows) {
            const bool valid = row[validity] == "valid";
            o.require((row[status] == "success") == valid, "operation outcome mismatch at step " + row[0]);
            if (!valid) o.require(row[kept] == "true", "digest changed at step " + row[0]);
            o.require(row[conserved] == "true", "conservation false at step " + row[0]);
        }
    }
    o.require(r.passed(), r.passed() ? "" : r.failures.front());
    o.require(secs < 5.0, "runtime over 5 s");
    if (o.ok) o.detail = "30/30 reverted, " + std::to_string(metric_u64(r, "valid_accepted")) + " accepted, conserved";
    return o;
}

Outcome criterion5(const exp::ExpConfig& cfg, double& secs) {
    exp::ExpResult r;
    secs = timed([&] { r = exp::run_exp4(cfg); });
    Outcome o;
    o.require(metric_u64(r, "modulus_bits") == 2048, "modulus is not 2048 bits");
    const auto* runs = find_series(r, "verifications");
    o.require(runs != nullptr, "verifications series missing");
    if (runs) {
        std::map<std::string, int> reps;
        std::set<std::string> gas;
        const auto size = column(*runs, "set_size");
        const auto probe = column(*runs, "probe");
        const auto result = column(*runs, "result");
        const auto used = column(*runs, "gas_used");
        for (const auto& row : runs->rows) {
            if (row[probe] == "member") {
                reps[row[size]] += 1;
                o.require(row[result] == "true", "member check failed");
            }
            gas.insert(row[used]);
        }
        o.require(reps.size() == 3 && reps["10"] >= 20 && reps["50"] >= 20 && reps["100"] >= 20,
                  "missing repetitions for a set size");
        o.require(gas.size() == 1, "verify gas varies across runs");
        if (o.ok) o.detail = "gas " + *gas.begin() + " at sizes 10/50/100, 0% variation";
    }
    o.require(r.passed(), r.passed() ? "" : r.failures.front());
    o.require(secs < 30.0, "runtime over 30 s");
    return o;
}

Outcome criterion6(const exp::ExpConfig& cfg, double& secs) {
    exp::ExpResult r;
    secs = timed([&] { r = exp::run_exp5(cfg); });
    Outcome o;
    const auto* req = find_series(r, "requests");
    o.require(req != nullptr, "requests series missing");
    if (!req) return o;
    const auto cat = column(*req, "category");
    const auto status = column(*req, "status");
    const auto reason = column(*req, "revert_reason");
    const auto result = column(*req, "result");
    const auto gas = column(*req, "gas_used");
    std::uint64_t gate1_max = 0, gate2_min = ~std::uint64_t{0};
    std::map<std::string, int> seen;
    for (const auto& row : req->rows) {
        seen[row[cat]] += 1;
        const std::uint64_t g = std::stoull(row[gas]);
        if (row[cat] == "unauthenticated") {
            o.require(row[status] == "reverted" && row[reason] == "identity gate", "unauthenticated request not stopped at gate 1");
            gate1_max = std::max(gate1_max, g);
        } else {
            o.require(row[status] == "success", "authenticated request reverted");
            gate2_min = std::min(gate2_min, g);
            if (row[cat] == "authorized") o.require(row[result] == "true", "authorized request returned false");
            if (row[cat] == "mismatch") o.require(row[result] == "false", "mismatched authorization returned true");
        }
    }
    o.require(seen["unauthenticated"] > 0 && seen["authorized"] > 0 && seen["mismatch"] > 0, "a request category is empty");
    o.require(gate1_max < gate2_min, "gate-1 revert gas not below gate-2 floor");
    o.require(r.passed(), r.passed() ? "" : r.failures.front());
    o.require(secs < 5.0, "runtime over 5 s");
    if (o.ok) {
        o.detail = std::to_string(seen["unauthenticated"]) + " gate-1 reverts (max gas " + std::to_string(gate1_max) +
                   " < gate-2 floor " + std::to_string(gate2_min) + "), " + std::to_string(seen["authorized"]) +
                   " true, " + std::to_string(seen["mismatch"]) + " false";
    }
    return o;
}

Digest32 rand_digest(std::mt19937_64& rng) {
    Bytes32 d;
    for (std::size_t i = 0; i < 32; ++i) d[i] = static_cast<std::uint8_t>(rng());
    return d;
}

Outcome criterion7() {
    Outcome o;
    for (const auto& v : oracle::kKeccakText) o.require(crypto::keccak256(v.input).hex() == v.digest, "keccak text vector");
    for (const auto& v : oracle::kKeccakPattern) {
        o.require(crypto::keccak256(ByteView{oracle::keccak_pattern(v.length)}).hex() == v.digest, "keccak pattern vector");
    }

    std::mt19937_64 rng(0xacce55);
    for (int t = 0; t < 1000 && o.ok; ++t) {
        const std::size_t n = 1 + rng() % 512;
        std::vector<Digest32> leaves(n);
        for (auto& l : leaves) l = rand_digest(rng);
        const oracle::MerkleLevels ref(leaves);
        const auto root = crypto::merkle_root(leaves);
        o.require(root == ref.root(), "merkle root differs from reference");
        const std::size_t bound = n == 1 ? 0 : static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
        const std::size_t i = rng() % n;
        const auto proof = crypto::merkle_prove(leaves, i);
        o.require(proof.siblings == ref.path(i), "merkle path differs from reference");
        o.require(proof.siblings.size() <= bound, "proof longer than ceil(log2 n)");
        o.require(crypto::merkle_verify(root, leaves[i], proof), "merkle round trip failed");
        auto other = leaves[i];
        other[31] ^= 1;
        o.require(!crypto::merkle_verify(root, other, proof), "merkle accepted a wrong leaf");
    }

    const std::uint64_t n = 1000003ULL * 999983ULL;
    const auto prime = oracle::sieve(5000);
    std::vector<std::uint64_t> pool;
    for (std::uint64_t p = 3; p < prime.size(); ++p)
        if (prime[p]) pool.push_back(p);
    const crypto::AccumulatorParams small{crypto::BigInt{static_cast<unsigned long>(n)}, 5};
    for (int t = 0; t < 50 && o.ok; ++t) {
        std::set<std::uint64_t> members;
        const std::size_t size = 1 + rng() % 100;
        while (members.size() < size) members.insert(pool[rng() % pool.size()]);
        auto s = crypto::acc_empty(small);
        for (auto p : members) s = crypto::acc_add(s, crypto::BigInt{static_cast<unsigned long>(p)});
        o.require(s.value == crypto::BigInt{static_cast<unsigned long>(oracle::accumulate(5, members, n))},
                  "accumulator differs from brute force");
        const auto victim = *std::next(members.begin(), static_cast<long>(rng() % members.size()));
        auto rest = members;
        rest.erase(victim);
        o.require(crypto::acc_witness(s, crypto::BigInt{static_cast<unsigned long>(victim)}).value ==
                      crypto::BigInt{static_cast<unsigned long>(oracle::accumulate(5, rest, n))},
                  "witness differs from brute force");
    }

    const crypto::AccumulatorParams big{crypto::parse_bigint(exp::kDefaultModulusDecimal), 3};
    std::vector<crypto::BigInt> reps;
    for (std::uint64_t i = 0; i < 40; ++i) {
        Bytes d;
        append_u64_be(d, i);
        reps.push_back(crypto::hash_to_prime(d));
    }
    auto s = crypto::acc_empty(big);
    for (int i = 0; i < 8; ++i) s = crypto::acc_add(s, reps[static_cast<std::size_t>(i)]);
    int accepted = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto& target = reps[rng() % 8];
        const auto w = crypto::acc_witness(s, target);
        if (t % 2 == 0) {
            // Stale: accumulator moved on after one more add.
            const auto s2 = crypto::acc_add(s, reps[8 + rng() % 32]);
            accepted += crypto::acc_verify(s2.value, w.value, target, big.modulus) ? 1 : 0;
        } else {
            // Foreign: witness reused for a different prime.
            const auto& other = reps[8 + rng() % 32];
            accepted += crypto::acc_verify(s.value, w.value, other, big.modulus) ? 1 : 0;
        }
    }
    o.require(accepted == 0, std::to_string(accepted) + " stale/foreign witnesses accepted");
    if (o.ok) o.detail = "keccak vectors, 1000 merkle trees, 50 brute-force sets, 0/1000 stale or foreign accepted";
    return o;
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (!e.is_regular_file()) continue;
        std::ifstream in(e.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        files[fs::relative(e.path(), root).string()] = ss.str();
    }
    return files;
}

std::vector<std::string> final_digests(const exp::Summary& s) {
    std::vector<std::string> out;
    for (const auto& r : s.results)
        for (const auto& m : r.metrics)
            if (m.name.find("final_state_digest") != std::string::npos) out.push_back(m.value);
    return out;
}

Outcome criterion8(const exp::ExpConfig& cfg) {
    Outcome o;
    const fs::path base = fs::temp_directory_path() / ("hs-accept-" + std::to_string(::getpid()));
    fs::remove_all(base);
    std::vector<std::string> digests[2];
    for (int run = 0; run < 2; ++run) {
        const auto dir = base / ("run" + std::to_string(run));
        fs::create_directories(dir);
        const auto summary = exp::run_all(cfg);
        for (const auto& r : summary.results) exp::write_result(dir, r, cfg);
        exp::write_summary(dir, summary, cfg);
        digests[run] = final_digests(summary);
    }
    const auto a = read_tree(base / "run0");
    const auto b = read_tree(base / "run1");
    o.require(!a.empty(), "no output files written");
    o.require(a.size() == b.size(), "output trees have different file sets");
    for (const auto& [name, content] : a) {
        const auto it = b.find(name);
        o.require(it != b.end() && it->second == content, "file differs: " + name);
    }
    o.require(digests[0].size() >= 5 && digests[0] == digests[1], "final state digests differ");
    if (o.ok) {
        o.detail = std::to_string(a.size()) + " files byte-identical, " + std::to_string(digests[0].size()) +
                   " state digests equal";
    }
    fs::remove_all(base);
    return o;
}

}  // namespace

int main() {
    const auto cfg = exp::ExpConfig::defaults();
    int failed = 0;
    auto report = [&](int id, const std::string& name, const Outcome& o, double secs) {
        std::printf("criterion %d %-34s %s  %s", id, name.c_str(), o.ok ? "PASS" : "FAIL", o.detail.c_str());
        if (secs >= 0) std::printf(" [%.2fs]", secs);
        std::printf("\n");
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    };
    auto guarded = [&](int id, const std::string& name, const std::function<Outcome(double&)>& f) {
        double secs = -1;
        Outcome o;
        try {
            o = f(secs);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        report(id, name, o, secs);
    };

    guarded(1, "exp1 replay and tamper detection", [&](double& s) { return criterion1(cfg, s); });

    exp::ExpResult exp2;
    double exp2_secs = -1;
    try {
        exp2_secs = timed([&] { exp2 = exp::run_exp2(cfg); });
    } catch (const std::exception& e) {
        exp2.failures.push_back(e.what());
    }
    guarded(2, "exp2 shape and ordering", [&](double& s) {
        s = exp2_secs;
        return criterion2(exp2, cfg, exp2_secs);
    });
    guarded(3, "exp2 reduction band", [&](double&) { return criterion3(exp2, cfg); });
    guarded(4, "exp3 carbon lifecycle", [&](double& s) { return criterion4(cfg, s); });
    guarded(5, "exp4 constant membership gas", [&](double& s) { return criterion5(cfg, s); });
    guarded(6, "exp5 two-gate disclosure", [&](double& s) { return criterion6(cfg, s); });
    guarded(7, "property suites", [&](double& s) {
        Outcome o;
        s = timed([&] { o = criterion7(); });
        return o;
    });
    guarded(8, "determinism of run_all", [&](double& s) {
        Outcome o;
        s = timed([&] { o = criterion8(cfg); });
        return o;
    });
    std::printf("%d/8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
