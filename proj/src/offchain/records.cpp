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

#include <hybridsettle/offchain/records.hpp>

#include <algorithm>

#include <hybridsettle/crypto/keccak.hpp>
#include <hybridsettle/crypto/merkle.hpp>

namespace hybridsettle::offchain {

namespace {

    void put_u64(Bytes& out, std::uint64_t v) {
        out.insert(out.end(), 24, 0);
        append_u64_be(out, v);
    }

    void put_padded(Bytes& out, ByteView data) {
        out.insert(out.end(), data.begin(), data.end());
        out.insert(out.end(), 32 - data.size(), 0);
    }

    std::uint64_t get_u64(ByteView word) {
        if (std::any_of(word.begin(), word.begin() + 24, [](std::uint8_t b) { return b != 0; })) {
            throw RecordError("integer word out of range");
        }
        return read_u64_be(word.subspan(24));
    }

    // Timestamps tampered within one simulated day; the limits below keep draws valid.
    constexpr std::uint64_t kTamperClockSpan = 86400;
    constexpr std::uint64_t kTamperEnergyMax = 1000;
    constexpr std::uint64_t kTamperPriceMax = 200000;
    constexpr std::string_view kRegionAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-";

    template <typename Draw>
    auto draw_different(const auto& current, Draw draw) {
        for (;;) {
            auto next = draw();
            if (next != current) return next;
        }
    }

}  // namespace

void validate(const SettlementRecord& record) {
    if (record.energy_kwh == 0) throw RecordError("energy must be positive");
    if (record.price_milli == 0) throw RecordError("price must be positive");
    if (record.region.empty() || record.region.size() > kMaxRegionLength) throw RecordError("region length");
    if (record.region.find('\0') != std::string::npos) throw RecordError("region contains NUL");
    if (record.tx_type != TxType::Buy && record.tx_type != TxType::Sell) throw RecordError("tx_type");
}

Bytes encode_record(const SettlementRecord& record) {
    validate(record);
    Bytes out;
    out.reserve(kRecordSize);
    put_u64(out, record.timestamp);
    put_padded(out, record.participant_id);
    put_u64(out, static_cast<std::uint64_t>(record.tx_type));
    put_u64(out, record.energy_kwh);
    put_u64(out, record.price_milli);
    put_padded(out, as_bytes(record.region));
    return out;
}

SettlementRecord decode_record(ByteView encoded) {
    if (encoded.size() != kRecordSize) throw RecordError("record must be 192 bytes");
    auto word = [&](std::size_t i) { return encoded.subspan(i * 32, 32); };
    SettlementRecord r;
    r.timestamp = get_u64(word(0));
    const ByteView id = word(1);
    if (std::any_of(id.begin() + 16, id.end(), [](std::uint8_t b) { return b != 0; })) {
        throw RecordError("participant word padding");
    }
    std::copy_n(id.begin(), 16, r.participant_id.begin());
    const std::uint64_t type = get_u64(word(2));
    if (type > 1) throw RecordError("tx_type");
    r.tx_type = static_cast<TxType>(type);
    r.energy_kwh = get_u64(word(3));
    r.price_milli = get_u64(word(4));
    const ByteView region = word(5);
    const auto end = std::find(region.begin(), region.end(), std::uint8_t{0});
    if (std::any_of(end, region.end(), [](std::uint8_t b) { return b != 0; })) {
        throw RecordError("region word padding");
    }
    r.region.assign(region.begin(), end);
    validate(r);
    return r;
}

Digest32 build_digest(const SettlementRecord& record) { return crypto::keccak256(encode_record(record)); }

std::string_view field_name(Field field) noexcept {
    switch (field) {
        case Field::Timestamp: return "timestamp";
        case Field::ParticipantId: return "participant_id";
        case Field::TxType: return "tx_type";
        case Field::EnergyKwh: return "energy_kwh";
        case Field::PriceMilli: return "price_milli";
        case Field::Region: return "region";
    }
    return "unknown";
}

Field parse_field(std::string_view name) {
    for (Field f : kAllFields) {
        if (field_name(f) == name) return f;
    }
    throw RecordError("unknown field: " + std::string(name));
}

Bytes32 batch_id_for(std::uint64_t sequence, const Digest32& root) {
    Bytes pre;
    append(pre, as_bytes("batch"));
    append_u64_be(pre, sequence);
    append(pre, root.view());
    return crypto::keccak256(pre);
}

Batch build_batch(std::span<const SettlementRecord> records, std::uint64_t sequence) {
    if (records.empty()) throw RecordError("empty batch");
    Batch b;
    b.records.assign(records.begin(), records.end());
    b.leaves.reserve(records.size());
    for (const auto& r : records) b.leaves.push_back(build_digest(r));
    b.root = crypto::merkle_root(b.leaves);
    b.batch_id = batch_id_for(sequence, b.root);
    return b;
}

SettlementRecord tamper(const SettlementRecord& record, Field field, std::mt19937_64& rng) {
    SettlementRecord out = record;
    switch (field) {
        case Field::Timestamp: {
            std::uniform_int_distribution<std::uint64_t> d(0, kTamperClockSpan - 1);
            out.timestamp = draw_different(record.timestamp, [&] { return d(rng); });
            break;
        }
        case Field::ParticipantId: {
            std::uniform_int_distribution<int> d(0, 255);
            out.participant_id = draw_different(record.participant_id, [&] {
                ParticipantId id{};
                for (auto& b : id) b = static_cast<std::uint8_t>(d(rng));
                return id;
            });
            break;
        }
        case Field::TxType:
            out.tx_type = record.tx_type == TxType::Buy ? TxType::Sell : TxType::Buy;
            break;
        case Field::EnergyKwh: {
            std::uniform_int_distribution<std::uint64_t> d(1, kTamperEnergyMax);
            out.energy_kwh = draw_different(record.energy_kwh, [&] { return d(rng); });
            break;
        }
        case Field::PriceMilli: {
            std::uniform_int_distribution<std::uint64_t> d(1, kTamperPriceMax);
            out.price_milli = draw_different(record.price_milli, [&] { return d(rng); });
            break;
        }
        case Field::Region: {
            std::uniform_int_distribution<std::size_t> len(1, kMaxRegionLength);
            std::uniform_int_distribution<std::size_t> ch(0, kRegionAlphabet.size() - 1);
            out.region = draw_different(record.region, [&] {
                std::string s(len(rng), ' ');
                for (auto& c : s) c = kRegionAlphabet[ch(rng)];
                return s;
            });
            break;
        }
    }
    return out;
}

}  // namespace hybridsettle::offchain
