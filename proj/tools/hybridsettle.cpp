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

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <hybridsettle/exp/experiments.hpp>

using namespace hybridsettle;

namespace {

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out{"results"};
    bool emit_plots{false};
};

exp::ExpConfig load_config(const Options& opts) {
    KeyValueConfig kv;
    if (!opts.config_path.empty()) kv = KeyValueConfig::load(opts.config_path);
    if (opts.seed) kv.set("seed", std::to_string(*opts.seed));
    return exp::ExpConfig::from_config(kv);
}

void report(const exp::ExpResult& r) {
    std::cout << fmt::format("exp{} {:<44} {} measured={} reported={}\n", r.id, r.title, r.passed() ? "PASS" : "FAIL",
                             r.measured, r.reported);
    for (const auto& f : r.failures) std::cout << "  - " << f << '\n';
}

int run(const Options& opts, std::optional<int> only) {
    const auto config = load_config(opts);
    const std::filesystem::path out{opts.out};
    std::cout << fmt::format("seed={} config_digest={}\ngas_schedule={}\n", config.seed(), config.digest().hex(),
                             config.schedule.echo());
    if (only) {
        const auto r = exp::run_exp(*only, config);
        exp::write_result(out, r, config, opts.emit_plots);
        report(r);
        return r.passed() ? 0 : 1;
    }
    const auto summary = exp::run_all(config);
    for (const auto& r : summary.results) {
        exp::write_result(out, r, config, opts.emit_plots);
        report(r);
    }
    exp::write_summary(out, summary, config);
    return summary.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid on-chain/off-chain settlement experiments"};
    app.require_subcommand(1);
    Options opts;
    std::optional<int> only;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "key=value configuration file")->check(CLI::ExistingFile);
        sub->add_option("--seed", opts.seed, "master seed (overrides the config file)");
        sub->add_option("--out", opts.out, "output directory")->capture_default_str();
        sub->add_flag("--emit-plots", opts.emit_plots, "also write gnuplot scripts next to the series");
    };
    for (int id = 1; id <= 5; ++id) {
        auto* sub = app.add_subcommand(fmt::format("exp{}", id), fmt::format("run experiment {}", id));
        add_common(sub);
        sub->callback([&only, id] { only = id; });
    }
    add_common(app.add_subcommand("all", "run every experiment and write summary.csv"));

    CLI11_PARSE(app, argc, argv);
    try {
        return run(opts, only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
