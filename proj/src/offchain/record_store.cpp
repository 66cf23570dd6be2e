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

#include <hybridsettle/offchain/record_store.hpp>

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include <hybridsettle/config.hpp>

namespace hybridsettle::offchain {

namespace {

    std::filesystem::path with_suffix(const std::filesystem::path& base, std::string_view suffix) {
        std::filesystem::path p = base;
        p += suffix;
        return p;
    }

}  // namespace

void append_record(std::ostream& out, const SettlementRecord& record) { out << to_hex(encode_record(record)) << '\n'; }

void write_record_store(const std::filesystem::path& base, std::span<const SettlementRecord> records,
                        const StoreManifest& manifest) {
    if (!manifest.mapping.empty() && manifest.mapping.size() != records.size()) {
        throw RecordError("mapping size does not match record count");
    }
    {
        std::ofstream log(with_suffix(base, ".log"), std::ios::binary | std::ios::trunc);
        if (!log) throw RecordError("cannot open record log");
        for (const auto& r : records) append_record(log, r);
    }
    std::ofstream man(with_suffix(base, ".manifest"), std::ios::binary | std::ios::trunc);
    if (!man) throw RecordError("cannot open manifest");
    man << fmt::format("seed={}\nconfig_digest={}\ncount={}\n", manifest.seed, manifest.config_digest.hex(),
                       records.size());
    for (std::size_t i = 0; i < manifest.mapping.size(); ++i) {
        man << fmt::format("map.{}={}\n", i, format_anchor(manifest.mapping[i]));
    }
}

RecordStore read_record_store(const std::filesystem::path& base) {
    RecordStore store;
    std::ifstream log(with_suffix(base, ".log"), std::ios::binary);
    if (!log) throw RecordError("cannot open record log");
    std::string line;
    while (std::getline(log, line)) {
        if (line.empty()) continue;
        try {
            store.records.push_back(decode_record(from_hex(line)));
        } catch (const std::invalid_argument& e) {
            throw RecordError(fmt::format("record {}: {}", store.records.size(), e.what()));
        }
    }
    KeyValueConfig man;
    try {
        man = KeyValueConfig::load(with_suffix(base, ".manifest"));
    } catch (const ConfigError& e) {
        throw RecordError(e.what());
    }
    store.manifest.seed = man.get_u64("seed", 0);
    store.manifest.config_digest = Bytes32::from_hex(man.get_string("config_digest", std::string(64, '0')));
    if (man.get_u64("count", 0) != store.records.size()) throw RecordError("record count mismatch");
    for (std::size_t i = 0;; ++i) {
        const auto anchor = man.get(fmt::format("map.{}", i));
        if (!anchor) break;
        store.manifest.mapping.push_back(parse_anchor(*anchor));
    }
    if (!store.manifest.mapping.empty() && store.manifest.mapping.size() != store.records.size()) {
        throw RecordError("mapping size does not match record count");
    }
    return store;
}

}  // namespace hybridsettle::offchain
