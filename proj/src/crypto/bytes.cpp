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

#include <hybridsettle/crypto/bytes.hpp>

#include <algorithm>
#include <stdexcept>

namespace hybridsettle {

namespace {

    int hex_value(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    }

    std::string_view strip_prefix(std::string_view hex) {
        if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
            hex.remove_prefix(2);
        }
        return hex;
    }

}  // namespace

Bytes32 Bytes32::from_span(ByteView raw) {
    if (raw.size() != kSize) {
        throw std::invalid_argument("Bytes32 requires exactly 32 bytes");
    }
    Bytes32 out;
    std::copy(raw.begin(), raw.end(), out.bytes_.begin());
    return out;
}

Bytes32 Bytes32::from_hex(std::string_view hex) {
    const Bytes raw = hybridsettle::from_hex(hex);
    return from_span(raw);
}

Bytes32 Bytes32::right_padded(ByteView raw) {
    if (raw.size() > kSize) {
        throw std::invalid_argument("value longer than 32 bytes");
    }
    Bytes32 out;
    std::copy(raw.begin(), raw.end(), out.bytes_.begin());
    return out;
}

Bytes32 Bytes32::right_padded(std::string_view text) { return right_padded(as_bytes(text)); }

Bytes32 Bytes32::from_u64(std::uint64_t value) {
    Bytes32 out;
    for (std::size_t i = 0; i < 8; ++i) {
        out.bytes_[kSize - 1 - i] = static_cast<std::uint8_t>(value >> (8 * i));
    }
    return out;
}

std::string Bytes32::hex() const { return to_hex(view()); }

bool Bytes32::is_zero() const noexcept {
    return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

std::uint64_t Bytes32::low_u64() const noexcept { return read_u64_be(view().subspan(kSize - 8)); }

std::string to_hex(ByteView data) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (const std::uint8_t b : data) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    hex = strip_prefix(hex);
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("hex string has odd length");
    }
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = hex_value(hex[i]);
        const int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            throw std::invalid_argument("invalid hex digit");
        }
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

void append(Bytes& out, ByteView data) { out.insert(out.end(), data.begin(), data.end()); }

void append_u64_be(Bytes& out, std::uint64_t value) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(value >> shift));
    }
}

std::uint64_t read_u64_be(ByteView data) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < 8 && i < data.size(); ++i) {
        value = (value << 8) | data[i];
    }
    return value;
}

}  // namespace hybridsettle
