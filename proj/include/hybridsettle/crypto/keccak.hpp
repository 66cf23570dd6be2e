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
#include <string_view>

#include <hybridsettle/crypto/bytes.hpp>

namespace hybridsettle::crypto {

/// Incremental Keccak sponge with a 1088-bit rate and 256-bit output.
///
/// `domain_byte` selects the padding: 0x01 is the original Keccak submission
/// used across the EVM ecosystem, 0x06 is FIPS 202 SHA3-256.
class Keccak256 {
  public:
    static constexpr std::uint8_t kKeccakPadding = 0x01;
    static constexpr std::uint8_t kSha3Padding = 0x06;

    explicit Keccak256(std::uint8_t domain_byte = kKeccakPadding) noexcept : domain_{domain_byte} {}

    Keccak256& update(ByteView data) noexcept;
    Keccak256& update(std::string_view text) noexcept { return update(as_bytes(text)); }

    // Single use: the hasher must not be updated after finalize.
    [[nodiscard]] Digest32 finalize() noexcept;

  private:
    static constexpr std::size_t kRate = 136;

    void absorb_block() noexcept;

    std::array<std::uint64_t, 25> state_{};
    std::array<std::uint8_t, kRate> buffer_{};
    std::size_t buffered_{0};
    std::uint8_t domain_;
};

Digest32 keccak256(ByteView data) noexcept;
Digest32 keccak256(std::string_view text) noexcept;
Digest32 sha3_256(ByteView data) noexcept;

// keccak256(left || right), the Merkle parent rule.
Digest32 keccak256_pair(const Digest32& left, const Digest32& right) noexcept;

void keccak_f1600(std::array<std::uint64_t, 25>& lanes) noexcept;

}  // namespace hybridsettle::crypto
