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

#include <set>
#include <stdexcept>

#include <hybridsettle/crypto/bigint.hpp>

namespace hybridsettle::crypto {

class AccumulatorError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct AccumulatorParams {
    BigInt modulus;
    BigInt generator;
};

// RSA accumulator over prime representatives.
// Invariant: value == generator ^ (product of members) mod modulus.
struct AccumulatorState {
    BigInt modulus;
    BigInt generator;
    BigInt value;
    std::set<BigInt> members;
};

struct Witness {
    BigInt element;
    BigInt value;
};

// Throws std::invalid_argument unless modulus >= 3 and generator is in [2, modulus - 1].
AccumulatorState acc_empty(const AccumulatorParams& params);

// Throws AccumulatorError("already accumulated") or AccumulatorError("not prime").
AccumulatorState acc_add(const AccumulatorState& state, const BigInt& prime);

// Recomputes from the retained member set, no trapdoor.
// Throws AccumulatorError("not accumulated").
AccumulatorState acc_remove(const AccumulatorState& state, const BigInt& prime);

// Throws AccumulatorError("not accumulated").
Witness acc_witness(const AccumulatorState& state, const BigInt& prime);

// One modular exponentiation: witness ^ prime mod modulus == value.
bool acc_verify(const BigInt& value, const BigInt& witness, const BigInt& prime, const BigInt& modulus);

// generator ^ (product of members) mod modulus, evaluated from scratch.
BigInt acc_recompute(const AccumulatorParams& params, const std::set<BigInt>& members);

}  // namespace hybridsettle::crypto
