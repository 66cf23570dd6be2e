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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <hybridsettle/crypto/bytes.hpp>

namespace hybridsettle::crypto {

// Binary Merkle tree with positional pairing: parent = keccak256(left || right).
// An unpaired last node is promoted unchanged to the next level, so proofs for
// such positions skip that level and may be shorter than ceil(log2(n)).

struct MerkleProof {
    std::uint64_t leaf_index{0};
    std::vector<Digest32> siblings;  // bottom-up
    std::uint64_t tree_size{1};

    friend bool operator==(const MerkleProof&, const MerkleProof&) = default;
};

// Throws std::invalid_argument("empty batch") on an empty list.
Digest32 merkle_root(std::span<const Digest32> leaves);

// Throws std::out_of_range if index >= leaves.size().
MerkleProof merkle_prove(std::span<const Digest32> leaves, std::uint64_t index);

// Root implied by `leaf` and `proof`; nullopt if the proof shape does not fit tree_size.
std::optional<Digest32> merkle_fold(const Digest32& leaf, const MerkleProof& proof) noexcept;

// Never throws; malformed proofs verify as false.
bool merkle_verify(const Digest32& root, const Digest32& leaf, const MerkleProof& proof) noexcept;

// Number of siblings a valid proof for `index` carries in a tree of `tree_size` leaves.
std::size_t merkle_proof_length(std::uint64_t tree_size, std::uint64_t index) noexcept;

// Text form "index:size:sib0,sib1,..." used in manifests.
std::string format_proof(const MerkleProof& proof);
MerkleProof parse_proof(std::string_view text);

}  // namespace hybridsettle::crypto
