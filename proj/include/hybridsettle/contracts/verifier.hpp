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
#include <optional>

#include <hybridsettle/ledger/ledger.hpp>

namespace hybridsettle::contracts {

// Anchors settlement digests and batch roots. Never parses business fields.
inline constexpr std::string_view kVerifier = "verifier";

enum class CommitmentKind : std::uint8_t { SingleDigest = 0, BatchRoot = 1 };

struct Commitment {
    Bytes32 id;
    CommitmentKind kind{CommitmentKind::SingleDigest};
    Digest32 value;
    std::uint64_t declared_count{1};
    ledger::AccountId committer;
    std::uint64_t clock{0};

    friend bool operator==(const Commitment&, const Commitment&) = default;
};

class OnOffChainVerifier final : public ledger::Contract {
  public:
    [[nodiscard]] std::string_view name() const noexcept override { return kVerifier; }
    void execute(std::string_view operation, ledger::WordReader& args, ledger::ExecContext& ctx) const override;

    // Metered lookup shared with other contracts (e.g. trading.settle).
    static std::optional<Commitment> lookup(ledger::ExecContext& ctx, const Bytes32& id);
};

namespace verifier {

    ledger::Call commit(const Bytes32& id, CommitmentKind kind, const Digest32& value, std::uint64_t count);
    ledger::Call get(const Bytes32& id);

    std::optional<Commitment> decode_get(ByteView output);

    // Metered read through Ledger::view; the auditor's path to anchors.
    std::optional<Commitment> get(const ledger::Ledger& ledger, const Bytes32& id, const ledger::AccountId& reader);

}  // namespace verifier

}  // namespace hybridsettle::contracts
