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
#include <ostream>
#include <span>
#include <vector>

#include <hybridsettle/offchain/audit.hpp>
#include <hybridsettle/offchain/records.hpp>

namespace hybridsettle::offchain {

struct StoreManifest {
    std::uint64_t seed{0};
    Digest32 config_digest;
    std::vector<Anchor> mapping;  // one per record, may be empty if not yet anchored
};

struct RecordStore {
    std::vector<SettlementRecord> records;
    StoreManifest manifest;
};

// Appends one record as a lowercase hex line.
void append_record(std::ostream& out, const SettlementRecord& record);

// Writes `<base>.log` and `<base>.manifest`.
void write_record_store(const std::filesystem::path& base, std::span<const SettlementRecord> records,
                        const StoreManifest& manifest);

// Throws RecordError on malformed lines or a count mismatch.
RecordStore read_record_store(const std::filesystem::path& base);

}  // namespace hybridsettle::offchain
