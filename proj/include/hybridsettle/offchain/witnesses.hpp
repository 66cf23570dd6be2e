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

#include <map>
#include <span>

#include <hybridsettle/crypto/accumulator.hpp>

namespace hybridsettle::offchain {

// Witness for every member, computed by recursive halving of the member set
// (O(n log n) exponentiations instead of O(n^2)).
std::map<crypto::BigInt, crypto::Witness> maintain_witnesses(const crypto::AccumulatorState& state);

// Accumulator plus a witness table kept current across mutations.
class WitnessBook {
  public:
    explicit WitnessBook(const crypto::AccumulatorParams& params);

    // Existing witnesses absorb the new prime; the new member's witness is the previous value.
    void add(const crypto::BigInt& prime);
    // No trapdoor: witnesses are rebuilt from the remaining members.
    void remove(const crypto::BigInt& prime);

    [[nodiscard]] const crypto::AccumulatorState& state() const noexcept { return state_; }
    [[nodiscard]] const std::map<crypto::BigInt, crypto::Witness>& witnesses() const noexcept { return witnesses_; }
    // Throws crypto::AccumulatorError("not accumulated").
    [[nodiscard]] const crypto::Witness& witness(const crypto::BigInt& prime) const;

  private:
    crypto::AccumulatorState state_;
    std::map<crypto::BigInt, crypto::Witness> witnesses_;
};

}  // namespace hybridsettle::offchain
