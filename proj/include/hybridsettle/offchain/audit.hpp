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
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <hybridsettle/contracts/verifier.hpp>
#include <hybridsettle/crypto/merkle.hpp>
#include <hybridsettle/ledger/ledger.hpp>
#include <hybridsettle/offchain/records.hpp>

namespace hybridsettle::offchain {

// Record linkage: a single-digest commitment, or a leaf of a committed batch root.
struct SingleAnchor {
    Bytes32 commitment_id;
    friend bool operator==(const SingleAnchor&, const SingleAnchor&) = default;
};

struct BatchAnchor {
    Bytes32 commitment_id;
    crypto::MerkleProof proof;
    friend bool operator==(const BatchAnchor&, const BatchAnchor&) = default;
};

using Anchor = std::variant<SingleAnchor, BatchAnchor>;

inline constexpr std::string_view kReasonDigest = "digest mismatch";
inline constexpr std::string_view kReasonProof = "proof mismatch";
inline constexpr std::string_view kReasonAbsent = "absent anchor";

struct Mismatch {
    std::uint64_t index{0};
    Digest32 stored;
    Digest32 computed;
    std::string reason;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct AuditReport {
    std::uint64_t total{0};
    std::uint64_t matched{0};
    std::vector<Mismatch> mismatched;  // ascending index

    [[nodiscard]] bool clean() const noexcept { return mismatched.empty(); }
    [[nodiscard]] bool is_match(std::uint64_t index) const;

    // index,verdict,stored,computed,reason; one row per record.
    void write_csv(std::ostream& out) const;
};

using CommitmentLookup = std::function<std::optional<contracts::Commitment>(const Bytes32&)>;

// Recomputes each record's digest and compares it with its anchor. For batch
// anchors `stored` is the committed root and `computed` the root implied by
// the recomputed leaf and proof. Throws std::invalid_argument if the mapping
// does not cover every record.
AuditReport replay_audit(std::span<const SettlementRecord> records, std::span<const Anchor> mapping,
                         const CommitmentLookup& lookup);

// Anchors are read through public views on `ledger`.
AuditReport replay_audit(std::span<const SettlementRecord> records, std::span<const Anchor> mapping,
                         const ledger::Ledger& ledger, const ledger::AccountId& auditor);

// "single:<id>" or "batch:<id>:<proof>"
std::string format_anchor(const Anchor& anchor);
Anchor parse_anchor(std::string_view text);

}  // namespace hybridsettle::offchain
