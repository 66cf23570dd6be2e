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

#include <hybridsettle/crypto/prime.hpp>

#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::crypto {

const std::array<std::uint32_t, kMillerRabinRounds>& miller_rabin_bases() noexcept {
    static constexpr std::array<std::uint32_t, kMillerRabinRounds> kBases{
        2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
        59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
        137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
        227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311,
    };
    return kBases;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (const std::uint32_t p : miller_rabin_bases()) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
    }

    // n - 1 = d * 2^s with d odd
    const BigInt n_minus_1 = n - 1;
    BigInt d = n_minus_1;
    const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    BigInt x;
    for (const std::uint32_t base : miller_rabin_bases()) {
        const BigInt a{base};
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) continue;
        bool witness_found = true;
        for (mp_bitcnt_t r = 1; r < s; ++r) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == n_minus_1) {
                witness_found = false;
                break;
            }
        }
        if (witness_found) return false;
    }
    return true;
}

BigInt hash_to_prime(ByteView data) {
    const Digest32 digest = keccak256(data);
    BigInt candidate = from_bytes_be(digest.view().subspan(16));
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (candidate < 3) candidate = 3;
    while (!is_probable_prime(candidate)) {
        candidate += 2;
    }
    return candidate;
}

}  // namespace hybridsettle::crypto
