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

#include <hybridsettle/crypto/keccak.hpp>

#include <algorithm>
#include <bit>
#include <cstring>

namespace hybridsettle::crypto {

namespace {

    constexpr std::array<std::uint64_t, 24> kRoundConstants{
        0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
        0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
        0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
        0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
        0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
        0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
    };

    // Rotation offsets and destinations for the combined rho+pi step, walking
    // the lane cycle that starts at lane 1.
    constexpr std::array<int, 24> kRho{1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                       27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
    constexpr std::array<int, 24> kPi{10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                      15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

    std::uint64_t load_le(const std::uint8_t* p) noexcept {
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) {
            v = (v << 8) | p[i];
        }
        return v;
    }

}  // namespace

void keccak_f1600(std::array<std::uint64_t, 25>& a) noexcept {
    for (const std::uint64_t rc : kRoundConstants) {
        std::uint64_t c[5];
        for (int x = 0; x < 5; ++x) {
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        }
        for (int x = 0; x < 5; ++x) {
            const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5) {
                a[y + x] ^= d;
            }
        }

        std::uint64_t carry = a[1];
        for (int i = 0; i < 24; ++i) {
            const int j = kPi[i];
            const std::uint64_t tmp = a[j];
            a[j] = std::rotl(carry, kRho[i]);
            carry = tmp;
        }

        for (int y = 0; y < 25; y += 5) {
            std::uint64_t row[5];
            for (int x = 0; x < 5; ++x) {
                row[x] = a[y + x];
            }
            for (int x = 0; x < 5; ++x) {
                a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
            }
        }

        a[0] ^= rc;
    }
}

void Keccak256::absorb_block() noexcept {
    for (std::size_t i = 0; i < kRate / 8; ++i) {
        state_[i] ^= load_le(buffer_.data() + 8 * i);
    }
    keccak_f1600(state_);
    buffered_ = 0;
}

Keccak256& Keccak256::update(ByteView data) noexcept {
    std::size_t offset = 0;
    while (offset < data.size()) {
        const std::size_t take = std::min(kRate - buffered_, data.size() - offset);
        std::memcpy(buffer_.data() + buffered_, data.data() + offset, take);
        buffered_ += take;
        offset += take;
        if (buffered_ == kRate) {
            absorb_block();
        }
    }
    return *this;
}

Digest32 Keccak256::finalize() noexcept {
    std::memset(buffer_.data() + buffered_, 0, kRate - buffered_);
    buffer_[buffered_] ^= domain_;
    buffer_[kRate - 1] ^= 0x80;
    absorb_block();

    Digest32 out;
    for (std::size_t i = 0; i < Digest32::kSize; ++i) {
        out[i] = static_cast<std::uint8_t>(state_[i / 8] >> (8 * (i % 8)));
    }
    return out;
}

Digest32 keccak256(ByteView data) noexcept { return Keccak256{}.update(data).finalize(); }

Digest32 keccak256(std::string_view text) noexcept { return keccak256(as_bytes(text)); }

Digest32 sha3_256(ByteView data) noexcept {
    return Keccak256{Keccak256::kSha3Padding}.update(data).finalize();
}

Digest32 keccak256_pair(const Digest32& left, const Digest32& right) noexcept {
    return Keccak256{}.update(left.view()).update(right.view()).finalize();
}

}  // namespace hybridsettle::crypto
