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

#include <hybridsettle/offchain/audit.hpp>

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace hybridsettle::offchain {

namespace {

    struct Outcome {
        bool match{false};
        Digest32 stored;
        Digest32 computed;
        std::string_view reason;
    };

    Outcome check(const SettlementRecord& record, const Anchor& anchor, const CommitmentLookup& lookup) {
        Outcome o;
        o.computed = build_digest(record);
        if (const auto* single = std::get_if<SingleAnchor>(&anchor)) {
            const auto c = lookup(single->commitment_id);
            if (!c) {
                o.reason = kReasonAbsent;
                return o;
            }
            o.stored = c->value;
            o.match = c->kind == contracts::CommitmentKind::SingleDigest && o.stored == o.computed;
            if (!o.match) o.reason = kReasonDigest;
            return o;
        }
        const auto& batch = std::get<BatchAnchor>(anchor);
        const auto c = lookup(batch.commitment_id);
        if (!c) {
            o.reason = kReasonAbsent;
            return o;
        }
        o.stored = c->value;
        const auto folded = crypto::merkle_fold(o.computed, batch.proof);
        if (folded) o.computed = *folded;
        o.match = folded && c->kind == contracts::CommitmentKind::BatchRoot &&
                  c->declared_count == batch.proof.tree_size && *folded == c->value;
        if (!o.match) o.reason = kReasonProof;
        return o;
    }

}  // namespace

bool AuditReport::is_match(std::uint64_t index) const {
    return !std::binary_search(mismatched.begin(), mismatched.end(), Mismatch{index, {}, {}, {}},
                               [](const Mismatch& a, const Mismatch& b) { return a.index < b.index; });
}

void AuditReport::write_csv(std::ostream& out) const {
    out << "index,verdict,stored,computed,reason\n";
    // Matched rows carry no digests in the report; only mismatches are itemized.
    auto it = mismatched.begin();
    for (std::uint64_t i = 0; i < total; ++i) {
        if (it != mismatched.end() && it->index == i) {
            out << fmt::format("{},mismatch,{},{},{}\n", i, it->stored.hex(), it->computed.hex(), it->reason);
            ++it;
        } else {
            out << fmt::format("{},match,,,\n", i);
        }
    }
}

AuditReport replay_audit(std::span<const SettlementRecord> records, std::span<const Anchor> mapping,
                         const CommitmentLookup& lookup) {
    if (mapping.size() != records.size()) {
        throw std::invalid_argument("mapping does not cover every record");
    }
    AuditReport report;
    report.total = records.size();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Outcome o = check(records[i], mapping[i], lookup);
        if (o.match) {
            ++report.matched;
        } else {
            report.mismatched.push_back({i, o.stored, o.computed, std::string(o.reason)});
        }
    }
    return report;
}

AuditReport replay_audit(std::span<const SettlementRecord> records, std::span<const Anchor> mapping,
                         const ledger::Ledger& ledger, const ledger::AccountId& auditor) {
    return replay_audit(records, mapping,
                        [&](const Bytes32& id) { return contracts::verifier::get(ledger, id, auditor); });
}

std::string format_anchor(const Anchor& anchor) {
    if (const auto* single = std::get_if<SingleAnchor>(&anchor)) {
        return "single:" + single->commitment_id.hex();
    }
    const auto& batch = std::get<BatchAnchor>(anchor);
    return "batch:" + batch.commitment_id.hex() + ":" + crypto::format_proof(batch.proof);
}

Anchor parse_anchor(std::string_view text) {
    const auto first = text.find(':');
    if (first == std::string_view::npos) throw RecordError("malformed anchor");
    const std::string_view kind = text.substr(0, first);
    const std::string_view rest = text.substr(first + 1);
    try {
        if (kind == "single") return SingleAnchor{Bytes32::from_hex(rest)};
        if (kind == "batch") {
            const auto second = rest.find(':');
            if (second == std::string_view::npos) throw RecordError("malformed anchor");
            return BatchAnchor{Bytes32::from_hex(rest.substr(0, second)), crypto::parse_proof(rest.substr(second + 1))};
        }
    } catch (const RecordError&) {
        throw;
    } catch (const std::exception& e) {
        throw RecordError(std::string("malformed anchor: ") + e.what());
    }
    throw RecordError("unknown anchor kind");
}

}  // namespace hybridsettle::offchain
