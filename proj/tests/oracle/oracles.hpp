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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the library code it is used to check.

#include <array>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <hybridsettle/crypto/bytes.hpp>
#include <hybridsettle/crypto/keccak.hpp>

namespace oracle {

struct KeccakText {
    std::string_view input;
    std::string_view digest;
};

struct KeccakPattern {
    std::size_t length;  // message byte i = (i * 7 + 3) & 0xff
    std::string_view digest;
};

// Frozen from tests/oracle/keccak_ref.py (bit-level Keccak-f, checked against hashlib SHA3).
inline constexpr std::array<KeccakText, 3> kKeccakText{{
    {"", "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470"},
    {"abc", "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45"},
    {"The quick brown fox jumps over the lazy dog", "4d741b6f1eb29cb2a9b9911c82f56fa8d73b04959d3d9d222895df6c0b28aa15"},
}};

inline constexpr std::array<KeccakPattern, 13> kKeccakPattern{{
    {0, "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470"},
    {1, "69c322e3248a5dfc29d73c5b0553b0185a35cd5bb6386747517ef7e53b15e287"},
    {3, "7d228cdb40e661b0731cd20c876de675137701233a19b450a36e53a053407a22"},
    {31, "8522dc30be01c01348c0591309ac2948c9ae4ce02facbb745f85a5297286d3dd"},
    {32, "04d1b47ed3b04c5ff6a0280293cb2ab55bd297c9c2e0c3449831b419285d7df2"},
    {33, "6aa134a68136f6d487895406a25cc734a9b20cb805cd09b7c1dcb29bcd490fe6"},
    {135, "00ef96af9cf4b24c7f269d922294444a197d0a33638c2e56634c57e892103a8f"},
    {136, "742061bcad767ed4c4f5883b1dcb1aad11afdcc140dc469d953759b127b9f9ed"},
    {137, "e3371f61e770abf254c34239c3b0099ad90594507415bc81dd0a10b9692bbf2a"},
    {200, "66d2cdf3ab4c5bd3c75add9b60b14ac5b7789534fa2da3f348853b847359a3a0"},
    {271, "4401c4afbe16ff911bdbf2d38e556e5b861f3fdf0f9d4306b1c46f6ae4f73584"},
    {272, "ac141fd7b0a0ffcd2e967254d508da3ec616596493c36fa304425647d90e6de5"},
    {273, "16192ea86793083e47731cb3c970600f04768414d92bc0540e54ce8607a0fce0"},
}};

inline hybridsettle::Bytes keccak_pattern(std::size_t n) {
    hybridsettle::Bytes m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>((i * 7 + 3) & 0xff);
    return m;
}

// Merkle reference: full level table, odd tail carried up unchanged.
struct MerkleLevels {
    std::vector<std::vector<hybridsettle::Digest32>> levels;

    explicit MerkleLevels(std::vector<hybridsettle::Digest32> leaves) {
        levels.push_back(std::move(leaves));
        while (levels.back().size() > 1) {
            const auto& cur = levels.back();
            std::vector<hybridsettle::Digest32> next;
            for (std::size_t i = 0; i < cur.size(); i += 2) {
                if (i + 1 == cur.size()) {
                    next.push_back(cur[i]);
                } else {
                    hybridsettle::Bytes cat(cur[i].data(), cur[i].data() + 32);
                    cat.insert(cat.end(), cur[i + 1].data(), cur[i + 1].data() + 32);
                    next.push_back(hybridsettle::crypto::keccak256(cat));
                }
            }
            levels.push_back(std::move(next));
        }
    }

    [[nodiscard]] hybridsettle::Digest32 root() const { return levels.back().front(); }

    [[nodiscard]] std::vector<hybridsettle::Digest32> path(std::size_t index) const {
        std::vector<hybridsettle::Digest32> out;
        for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
            const std::size_t sib = index ^ 1U;
            if (sib < levels[l].size()) out.push_back(levels[l][sib]);
            index /= 2;
        }
        return out;
    }
};

// Square-and-multiply with 128-bit intermediates; modulus below 2^63.
inline std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 result = 1 % mod;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1U) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1U;
    }
    return static_cast<std::uint64_t>(result);
}

// g^(prod members) mod n, one member at a time.
inline std::uint64_t accumulate(std::uint64_t g, const std::set<std::uint64_t>& members, std::uint64_t n) {
    std::uint64_t a = g % n;
    for (auto p : members) a = modpow(a, p, n);
    return a;
}

inline std::vector<bool> sieve(std::size_t limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = false;
    if (limit >= 1) prime[1] = false;
    for (std::size_t i = 2; i * i <= limit; ++i) {
        if (!prime[i]) continue;
        for (std::size_t j = i * i; j <= limit; j += i) prime[j] = false;
    }
    return prime;
}

// Record encoding assembled from hex text, field by field.
inline std::string hex_word_u64(std::uint64_t v) {
    char buf[65];
    std::snprintf(buf, sizeof buf, "%064llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string hex_word_padded(const std::uint8_t* data, std::size_t n) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < 32; ++i) {
        const std::uint8_t b = i < n ? data[i] : 0;
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

}  // namespace oracle
