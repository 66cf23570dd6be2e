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

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <hybridsettle/crypto/bytes.hpp>

namespace hybridsettle::crypto {

using BigInt = mpz_class;

// Minimal big-endian magnitude; zero encodes as an empty string.
Bytes to_bytes_be(const BigInt& value);
BigInt from_bytes_be(ByteView bytes);

// Left-zero-padded to exactly `width` bytes. Throws std::invalid_argument if it does not fit.
Bytes to_fixed_be(const BigInt& value, std::size_t width);

// Persisted form: 4-byte big-endian length followed by the minimal magnitude.
Bytes encode_length_prefixed(const BigInt& value);
// Parses one length-prefixed integer from the front of `bytes` and advances it.
BigInt decode_length_prefixed(ByteView& bytes);

// Accepts decimal or 0x-prefixed hex. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);
std::string to_hex_string(const BigInt& value);

BigInt modexp(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

std::size_t byte_length(const BigInt& value);

}  // namespace hybridsettle::crypto
