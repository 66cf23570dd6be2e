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
#include <stdexcept>
#include <string>
#include <string_view>

#include <hybridsettle/crypto/bigint.hpp>
#include <hybridsettle/crypto/bytes.hpp>

namespace hybridsettle::ledger {

// Canonical 32-byte word encoding shared by calldata, return data and event
// payloads. Integers are big-endian left-padded words; byte strings are a
// length word followed by right-zero-padded data words.

class DecodeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class WordWriter {
  public:
    WordWriter& u64(std::uint64_t value);
    WordWriter& boolean(bool value) { return u64(value ? 1 : 0); }
    WordWriter& word(const Bytes32& value);
    WordWriter& bytes(ByteView value);
    WordWriter& text(std::string_view value) { return bytes(as_bytes(value)); }
    // Fixed-width integer so the encoded size never depends on the value.
    WordWriter& big(const crypto::BigInt& value, std::size_t width);

    [[nodiscard]] const Bytes& data() const& noexcept { return out_; }
    [[nodiscard]] Bytes take() && noexcept { return std::move(out_); }

  private:
    Bytes out_;
};

class WordReader {
  public:
    explicit WordReader(ByteView data) noexcept : data_{data} {}

    std::uint64_t u64();
    bool boolean();
    Bytes32 word();
    Bytes bytes();
    std::string text();
    crypto::BigInt big();

    [[nodiscard]] bool done() const noexcept { return offset_ == data_.size(); }

  private:
    ByteView data_;
    std::size_t offset_{0};
};

inline std::size_t padded_size(std::size_t n) noexcept { return (n + 31) / 32 * 32; }

}  // namespace hybridsettle::ledger
