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

#include <hybridsettle/crypto/accumulator.hpp>

#include <hybridsettle/crypto/prime.hpp>

namespace hybridsettle::crypto {

namespace {

    BigInt product_excluding(const std::set<BigInt>& members, const BigInt* skip) {
        BigInt product{1};
        for (const BigInt& m : members) {
            if (skip != nullptr && m == *skip) continue;
            product *= m;
        }
        return product;
    }

}  // namespace

AccumulatorState acc_empty(const AccumulatorParams& params) {
    if (params.modulus < 3) {
        throw std::invalid_argument("accumulator modulus must be >= 3");
    }
    if (params.generator < 2 || params.generator >= params.modulus) {
        throw std::invalid_argument("accumulator generator must lie in [2, N-1]");
    }
    return AccumulatorState{params.modulus, params.generator, params.generator, {}};
}

AccumulatorState acc_add(const AccumulatorState& state, const BigInt& prime) {
    if (state.members.contains(prime)) {
        throw AccumulatorError("already accumulated");
    }
    if (!is_probable_prime(prime)) {
        throw AccumulatorError("not prime");
    }
    AccumulatorState next = state;
    next.value = modexp(state.value, prime, state.modulus);
    next.members.insert(prime);
    return next;
}

AccumulatorState acc_remove(const AccumulatorState& state, const BigInt& prime) {
    if (!state.members.contains(prime)) {
        throw AccumulatorError("not accumulated");
    }
    AccumulatorState next = state;
    next.members.erase(prime);
    next.value = acc_recompute({state.modulus, state.generator}, next.members);
    return next;
}

Witness acc_witness(const AccumulatorState& state, const BigInt& prime) {
    if (!state.members.contains(prime)) {
        throw AccumulatorError("not accumulated");
    }
    return Witness{prime, modexp(state.generator, product_excluding(state.members, &prime), state.modulus)};
}

bool acc_verify(const BigInt& value, const BigInt& witness, const BigInt& prime, const BigInt& modulus) {
    if (modulus < 2 || prime < 1) return false;
    return modexp(witness, prime, modulus) == value;
}

BigInt acc_recompute(const AccumulatorParams& params, const std::set<BigInt>& members) {
    return modexp(params.generator, product_excluding(members, nullptr), params.modulus);
}

}  // namespace hybridsettle::crypto
