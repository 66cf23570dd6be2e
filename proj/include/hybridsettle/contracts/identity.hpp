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
#include <optional>
#include <string>
#include <vector>

#include <hybridsettle/crypto/merkle.hpp>
#include <hybridsettle/crypto/signature.hpp>
#include <hybridsettle/ledger/ledger.hpp>

namespace hybridsettle::contracts {

inline constexpr std::string_view kDidRegistry = "did";
inline constexpr std::string_view kDisclosure = "sd";

// Challenges are bound to floor(clock / 60); each bucket authenticates a DID once.
inline constexpr std::uint64_t kAuthBucketSeconds = 60;
inline constexpr std::uint64_t kDefaultAuthWindow = 300;
inline constexpr std::size_t kMaxDidLength = 128;

struct KeyRotation {
    Bytes key;
    std::uint64_t clock{0};
};

struct DidEntry {
    std::string did;
    ledger::AccountId controller;
    Bytes active_key;
    std::optional<std::uint64_t> last_auth_clock;
    std::vector<KeyRotation> key_history;
};

struct AttributeCommitment {
    std::string holder_did;
    Digest32 root;
    std::uint64_t committed_clock{0};
};

// Signed message layouts.
Bytes did_rotation_message(std::string_view did, ByteView new_key);
Bytes did_auth_message(std::string_view did, std::uint64_t bucket);
// requester_did || attribute_leaf || be64(nonce)
Bytes disclosure_authorization_message(std::string_view requester_did, const Digest32& leaf, std::uint64_t nonce);

// keccak256(key || 0x00 || value || salt); the salt keeps sibling hashes uninformative.
Digest32 attribute_leaf(std::string_view key, std::string_view value, const std::array<std::uint8_t, 16>& salt);

class DidRegistry final : public ledger::Contract {
  public:
    [[nodiscard]] std::string_view name() const noexcept override { return kDidRegistry; }
    void execute(std::string_view operation, ledger::WordReader& args, ledger::ExecContext& ctx) const override;
};

/// Two-gate attribute disclosure.
///
/// Gate 1 requires the requester DID to be controlled by the caller and
/// authenticated within `auth_window` seconds; failures revert before any
/// attribute logic runs. Gate 2 checks the holder's single-use authorization
/// signature and the Merkle proof against the holder's latest root, and
/// reports the outcome as a boolean.
class SelectiveDisclosure final : public ledger::Contract {
  public:
    explicit SelectiveDisclosure(std::uint64_t auth_window = kDefaultAuthWindow) : auth_window_{auth_window} {}

    [[nodiscard]] std::string_view name() const noexcept override { return kDisclosure; }
    void execute(std::string_view operation, ledger::WordReader& args, ledger::ExecContext& ctx) const override;

    [[nodiscard]] std::uint64_t auth_window() const noexcept { return auth_window_; }

  private:
    std::uint64_t auth_window_;
};

namespace did {

    ledger::Call register_did(std::string_view did, ByteView public_key);
    ledger::Call rotate(std::string_view did, ByteView new_key, ByteView signature);
    ledger::Call authenticate(std::string_view did, ByteView signature);

    std::optional<DidEntry> read_entry(const ledger::ChainState& state, std::string_view did);

}  // namespace did

namespace sd {

    ledger::Call commit_root(std::string_view holder_did, const Digest32& root);
    ledger::Call verify_attribute(std::string_view requester_did, std::string_view holder_did, const Digest32& leaf,
                                  const crypto::MerkleProof& proof, const crypto::SignatureBundle& authorization);

    bool decode_result(ByteView output);

    std::optional<AttributeCommitment> read_root(const ledger::ChainState& state, std::string_view holder_did);

}  // namespace sd

}  // namespace hybridsettle::contracts
