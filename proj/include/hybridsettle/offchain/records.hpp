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

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <hybridsettle/crypto/bytes.hpp>

namespace hybridsettle::offchain {

class RecordError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class TxType : std::uint8_t { Buy = 0, Sell = 1 };

using ParticipantId = std::array<std::uint8_t, 16>;

inline constexpr std::size_t kRecordWords = 6;
inline constexpr std::size_t kRecordSize = kRecordWords * 32;
inline constexpr std::size_t kMaxRegionLength = 16;

struct SettlementRecord {
    std::uint64_t timestamp{0};
    ParticipantId participant_id{};
    TxType tx_type{TxType::Buy};
    std::uint64_t energy_kwh{1};
    std::uint64_t price_milli{1};
    std::string region;

    friend bool operator==(const SettlementRecord&, const SettlementRecord&) = default;
};

// Throws RecordError unless energy and price are positive and the region is
// 1..16 bytes with no NUL byte.
void validate(const SettlementRecord& record);

// Six words in field order: timestamp, participant_id, tx_type, energy_kwh,
// price_milli, region. Integers are big-endian and left-padded; the id and
// region are right-padded with zeros.
Bytes encode_record(const SettlementRecord& record);
// Inverse of encode_record; throws RecordError on any non-canonical input.
SettlementRecord decode_record(ByteView encoded);

// keccak256(encode_record(record))
Digest32 build_digest(const SettlementRecord& record);

enum class Field : std::uint8_t { Timestamp, ParticipantId, TxType, EnergyKwh, PriceMilli, Region };

inline constexpr std::array<Field, 6> kAllFields{Field::Timestamp, Field::ParticipantId, Field::TxType,
                                                 Field::EnergyKwh,  Field::PriceMilli,    Field::Region};

std::string_view field_name(Field field) noexcept;
// Throws RecordError for an unknown name.
Field parse_field(std::string_view name);

struct Batch {
    Bytes32 batch_id;
    std::vector<SettlementRecord> records;
    std::vector<Digest32> leaves;
    Digest32 root;
};

// keccak256("batch" || be64(sequence) || root)
Bytes32 batch_id_for(std::uint64_t sequence, const Digest32& root);

// Throws RecordError("empty batch") on an empty list.
Batch build_batch(std::span<const SettlementRecord> records, std::uint64_t sequence = 0);

// Copy of `record` with `field` replaced by a uniformly drawn, different, valid value.
SettlementRecord tamper(const SettlementRecord& record, Field field, std::mt19937_64& rng);

}  // namespace hybridsettle::offchain
