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

#include <hybridsettle/crypto/merkle.hpp>

#include <charconv>
#include <stdexcept>

#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::crypto {

namespace {

    std::vector<Digest32> next_level(const std::vector<Digest32>& level) {
        std::vector<Digest32> parents;
        parents.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            parents.push_back(keccak256_pair(level[i], level[i + 1]));
        }
        if (level.size() % 2 == 1) {
            parents.push_back(level.back());
        }
        return parents;
    }

    std::uint64_t parse_u64(std::string_view text) {
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw std::invalid_argument("malformed proof integer");
        }
        return value;
    }

}  // namespace

Digest32 merkle_root(std::span<const Digest32> leaves) {
    if (leaves.empty()) {
        throw std::invalid_argument("empty batch");
    }
    std::vector<Digest32> level(leaves.begin(), leaves.end());
    while (level.size() > 1) {
        level = next_level(level);
    }
    return level.front();
}

MerkleProof merkle_prove(std::span<const Digest32> leaves, std::uint64_t index) {
    if (index >= leaves.size()) {
        throw std::out_of_range("leaf index out of range");
    }
    MerkleProof proof{index, {}, leaves.size()};
    std::vector<Digest32> level(leaves.begin(), leaves.end());
    std::uint64_t pos = index;
    while (level.size() > 1) {
        const bool promoted = (pos % 2 == 0) && (pos == level.size() - 1);
        if (!promoted) {
            proof.siblings.push_back(level[pos ^ 1]);
        }
        level = next_level(level);
        pos /= 2;
    }
    return proof;
}

std::optional<Digest32> merkle_fold(const Digest32& leaf, const MerkleProof& proof) noexcept {
    if (proof.tree_size == 0 || proof.leaf_index >= proof.tree_size) {
        return std::nullopt;
    }
    Digest32 node = leaf;
    std::uint64_t pos = proof.leaf_index;
    std::uint64_t width = proof.tree_size;
    std::size_t used = 0;
    while (width > 1) {
        const bool promoted = (pos % 2 == 0) && (pos == width - 1);
        if (!promoted) {
            if (used == proof.siblings.size()) {
                return std::nullopt;
            }
            const Digest32& sibling = proof.siblings[used++];
            node = (pos % 2 == 0) ? keccak256_pair(node, sibling) : keccak256_pair(sibling, node);
        }
        pos /= 2;
        width = (width + 1) / 2;
    }
    if (used != proof.siblings.size()) {
        return std::nullopt;
    }
    return node;
}

bool merkle_verify(const Digest32& root, const Digest32& leaf, const MerkleProof& proof) noexcept {
    const auto folded = merkle_fold(leaf, proof);
    return folded && *folded == root;
}

std::size_t merkle_proof_length(std::uint64_t tree_size, std::uint64_t index) noexcept {
    std::size_t length = 0;
    while (tree_size > 1) {
        if (!((index % 2 == 0) && (index == tree_size - 1))) {
            ++length;
        }
        index /= 2;
        tree_size = (tree_size + 1) / 2;
    }
    return length;
}

std::string format_proof(const MerkleProof& proof) {
    std::string out = std::to_string(proof.leaf_index) + ":" + std::to_string(proof.tree_size) + ":";
    for (std::size_t i = 0; i < proof.siblings.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += proof.siblings[i].hex();
    }
    return out;
}

MerkleProof parse_proof(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos) {
        throw std::invalid_argument("malformed proof");
    }
    MerkleProof proof;
    proof.leaf_index = parse_u64(text.substr(0, first));
    proof.tree_size = parse_u64(text.substr(first + 1, second - first - 1));
    std::string_view rest = text.substr(second + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        proof.siblings.push_back(Digest32::from_hex(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return proof;
}

}  // namespace hybridsettle::crypto
