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

#include <hybridsettle/ledger/words.hpp>

#include <algorithm>

namespace hybridsettle::ledger {

WordWriter& WordWriter::u64(std::uint64_t value) { return word(Bytes32::from_u64(value)); }

WordWriter& WordWriter::word(const Bytes32& value) {
    append(out_, value.view());
    return *this;
}

WordWriter& WordWriter::bytes(ByteView value) {
    u64(value.size());
    append(out_, value);
    out_.resize(out_.size() + (padded_size(value.size()) - value.size()), 0);
    return *this;
}

WordWriter& WordWriter::big(const crypto::BigInt& value, std::size_t width) {
    const Bytes fixed = crypto::to_fixed_be(value, width);
    return bytes(fixed);
}

Bytes32 WordReader::word() {
    if (data_.size() - offset_ < 32) {
        throw DecodeError("malformed calldata");
    }
    Bytes32 out = Bytes32::from_span(data_.subspan(offset_, 32));
    offset_ += 32;
    return out;
}

std::uint64_t WordReader::u64() {
    const Bytes32 w = word();
    if (!std::all_of(w.data(), w.data() + 24, [](std::uint8_t b) { return b == 0; })) {
        throw DecodeError("malformed calldata");
    }
    return w.low_u64();
}

bool WordReader::boolean() {
    const std::uint64_t v = u64();
    if (v > 1) {
        throw DecodeError("malformed calldata");
    }
    return v == 1;
}

Bytes WordReader::bytes() {
    const std::uint64_t len = u64();
    const std::size_t remaining = data_.size() - offset_;
    if (len > remaining || padded_size(len) > remaining) {
        throw DecodeError("malformed calldata");
    }
    Bytes out(data_.begin() + static_cast<std::ptrdiff_t>(offset_),
              data_.begin() + static_cast<std::ptrdiff_t>(offset_ + len));
    offset_ += padded_size(len);
    return out;
}

std::string WordReader::text() {
    const Bytes raw = bytes();
    return {raw.begin(), raw.end()};
}

crypto::BigInt WordReader::big() { return crypto::from_bytes_be(bytes()); }

}  // namespace hybridsettle::ledger
