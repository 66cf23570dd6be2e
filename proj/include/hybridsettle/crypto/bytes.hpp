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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hybridsettle {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// Fixed 32-byte value. Used for digests, storage slots and storage words.
class Bytes32 {
  public:
    static constexpr std::size_t kSize = 32;

    constexpr Bytes32() = default;
    explicit constexpr Bytes32(const std::array<std::uint8_t, kSize>& raw) : bytes_{raw} {}

    // Throws std::invalid_argument unless `raw` is exactly 32 bytes.
    static Bytes32 from_span(ByteView raw);
    // Accepts an optional 0x prefix; exactly 64 hex digits.
    static Bytes32 from_hex(std::string_view hex);
    // Right-zero-padded copy of at most 32 bytes.
    static Bytes32 right_padded(ByteView raw);
    static Bytes32 right_padded(std::string_view text);
    static Bytes32 from_u64(std::uint64_t value);

    [[nodiscard]] std::string hex() const;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::uint64_t low_u64() const noexcept;

    [[nodiscard]] const std::uint8_t* data() const noexcept { return bytes_.data(); }
    [[nodiscard]] std::uint8_t* data() noexcept { return bytes_.data(); }
    [[nodiscard]] static constexpr std::size_t size() noexcept { return kSize; }
    [[nodiscard]] ByteView view() const noexcept { return {bytes_.data(), kSize}; }
    [[nodiscard]] const std::array<std::uint8_t, kSize>& array() const noexcept { return bytes_; }

    std::uint8_t& operator[](std::size_t i) noexcept { return bytes_[i]; }
    std::uint8_t operator[](std::size_t i) const noexcept { return bytes_[i]; }

    friend auto operator<=>(const Bytes32&, const Bytes32&) = default;

  private:
    std::array<std::uint8_t, kSize> bytes_{};
};

using Digest32 = Bytes32;

std::string to_hex(ByteView data);
// Throws std::invalid_argument on odd length or non-hex characters. Accepts a 0x prefix.
Bytes from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view text) noexcept {
    return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

void append(Bytes& out, ByteView data);
void append_u64_be(Bytes& out, std::uint64_t value);
std::uint64_t read_u64_be(ByteView data);

}  // namespace hybridsettle
