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

#include <hybridsettle/crypto/bigint.hpp>

#include <algorithm>
#include <stdexcept>

namespace hybridsettle::crypto {

Bytes to_bytes_be(const BigInt& value) {
    if (value < 0) {
        throw std::invalid_argument("negative integers have no byte encoding");
    }
    const std::size_t len = byte_length(value);
    Bytes out(len);
    if (len > 0) {
        std::size_t written = 0;
        mpz_export(out.data(), &written, 1, 1, 1, 0, value.get_mpz_t());
    }
    return out;
}

BigInt from_bytes_be(ByteView bytes) {
    BigInt value;
    if (!bytes.empty()) {
        mpz_import(value.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    }
    return value;
}

Bytes to_fixed_be(const BigInt& value, std::size_t width) {
    const Bytes minimal = to_bytes_be(value);
    if (minimal.size() > width) {
        throw std::invalid_argument("integer does not fit the requested width");
    }
    Bytes out(width - minimal.size(), 0);
    out.insert(out.end(), minimal.begin(), minimal.end());
    return out;
}

Bytes encode_length_prefixed(const BigInt& value) {
    const Bytes minimal = to_bytes_be(value);
    const auto len = static_cast<std::uint32_t>(minimal.size());
    Bytes out(4 + minimal.size());
    for (int i = 0; i < 4; ++i) out[i] = static_cast<std::uint8_t>(len >> (24 - 8 * i));
    std::copy(minimal.begin(), minimal.end(), out.begin() + 4);
    return out;
}

BigInt decode_length_prefixed(ByteView& bytes) {
    if (bytes.size() < 4) {
        throw std::invalid_argument("truncated length prefix");
    }
    const std::size_t len = (std::size_t{bytes[0]} << 24) | (std::size_t{bytes[1]} << 16) |
                            (std::size_t{bytes[2]} << 8) | std::size_t{bytes[3]};
    if (bytes.size() < 4 + len) {
        throw std::invalid_argument("truncated integer");
    }
    if (len > 0 && bytes[4] == 0) {
        throw std::invalid_argument("non-minimal integer encoding");
    }
    BigInt value = from_bytes_be(bytes.subspan(4, len));
    bytes = bytes.subspan(4 + len);
    return value;
}

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\n' || c == '\t'; }),
            s.end());
    if (s.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    BigInt value;
    const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
    const int rc = hex ? mpz_set_str(value.get_mpz_t(), s.c_str() + 2, 16) : mpz_set_str(value.get_mpz_t(), s.c_str(), 10);
    if (rc != 0) {
        throw std::invalid_argument("malformed integer literal: " + s);
    }
    return value;
}

std::string to_hex_string(const BigInt& value) { return "0x" + value.get_str(16); }

BigInt modexp(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
    if (modulus <= 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (exponent < 0) {
        throw std::invalid_argument("negative exponent");
    }
    BigInt result;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return result;
}

std::size_t byte_length(const BigInt& value) {
    if (value == 0) return 0;
    return (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
}

}  // namespace hybridsettle::crypto
