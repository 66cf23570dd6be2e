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

#include <hybridsettle/offchain/witnesses.hpp>

#include <vector>

namespace hybridsettle::offchain {

using crypto::BigInt;

namespace {

    BigInt product(std::span<const BigInt> xs) {
        BigInt p = 1;
        for (const auto& x : xs) p *= x;
        return p;
    }

    // `base` already absorbs every member outside `members`.
    void split(const BigInt& base, std::span<const BigInt> members, const BigInt& modulus,
               std::map<BigInt, crypto::Witness>& out) {
        if (members.size() == 1) {
            out.emplace(members[0], crypto::Witness{members[0], base});
            return;
        }
        const std::size_t half = members.size() / 2;
        const auto left = members.first(half);
        const auto right = members.subspan(half);
        split(crypto::modexp(base, product(right), modulus), left, modulus, out);
        split(crypto::modexp(base, product(left), modulus), right, modulus, out);
    }

}  // namespace

std::map<BigInt, crypto::Witness> maintain_witnesses(const crypto::AccumulatorState& state) {
    std::map<BigInt, crypto::Witness> out;
    if (state.members.empty()) return out;
    const std::vector<BigInt> members(state.members.begin(), state.members.end());
    split(state.generator % state.modulus, members, state.modulus, out);
    return out;
}

WitnessBook::WitnessBook(const crypto::AccumulatorParams& params) : state_{crypto::acc_empty(params)} {}

void WitnessBook::add(const BigInt& prime) {
    const BigInt previous = state_.value;
    state_ = crypto::acc_add(state_, prime);
    for (auto& [element, w] : witnesses_) w.value = crypto::modexp(w.value, prime, state_.modulus);
    witnesses_.emplace(prime, crypto::Witness{prime, previous});
}

void WitnessBook::remove(const BigInt& prime) {
    state_ = crypto::acc_remove(state_, prime);
    witnesses_ = maintain_witnesses(state_);
}

const crypto::Witness& WitnessBook::witness(const BigInt& prime) const {
    const auto it = witnesses_.find(prime);
    if (it == witnesses_.end()) throw crypto::AccumulatorError("not accumulated");
    return it->second;
}

}  // namespace hybridsettle::offchain
