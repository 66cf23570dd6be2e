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
#include <optional>

#include <hybridsettle/crypto/bigint.hpp>
#include <hybridsettle/ledger/ledger.hpp>

namespace hybridsettle::contracts {

// Holds the current accumulator value; membership checks are one modular
// exponentiation whose cost does not depend on the size of the member set.
inline constexpr std::string_view kAccumulatorVerifier = "accver";

// Prime representatives travel as one 32-byte word.
inline constexpr std::size_t kPrimeWidth = 32;

struct OnChainAccumulator {
    crypto::BigInt value;
    crypto::BigInt modulus;
    crypto::BigInt generator;
    std::uint64_t epoch{0};
};

class AccumulatorVerifier final : public ledger::Contract {
  public:
    [[nodiscard]] std::string_view name() const noexcept override { return kAccumulatorVerifier; }
    void execute(std::string_view operation, ledger::WordReader& args, ledger::ExecContext& ctx) const override;
};

namespace accver {

    // Values are encoded at the modulus byte width so calldata size is fixed.
    ledger::Call set_state(const crypto::BigInt& value, const crypto::BigInt& modulus, const crypto::BigInt& generator);
    ledger::Call verify_membership(const crypto::BigInt& witness, const crypto::BigInt& prime, const crypto::BigInt& modulus);

    bool decode_result(ByteView output);

    std::optional<OnChainAccumulator> read_state(const ledger::ChainState& state);

}  // namespace accver

}  // namespace hybridsettle::contracts
