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

#include <hybridsettle/crypto/bigint.hpp>

namespace hybridsettle::crypto {

// Miller-Rabin with a fixed witness schedule: the first 64 primes, 2 through 311.
inline constexpr std::size_t kMillerRabinRounds = 64;

const std::array<std::uint32_t, kMillerRabinRounds>& miller_rabin_bases() noexcept;

bool is_probable_prime(const BigInt& n);

// Low 128 bits of keccak256(data), forced odd, then stepped by 2 until the
// Miller-Rabin test accepts. Always >= 3.
BigInt hash_to_prime(ByteView data);

}  // namespace hybridsettle::crypto
