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

#include <hybridsettle/contracts/accumulator_verifier.hpp>

#include <hybridsettle/contracts/storage.hpp>

namespace hybridsettle::contracts {

using crypto::BigInt;
using ledger::ExecContext;
using ledger::Role;
using ledger::WordReader;
using ledger::WordWriter;

namespace {

    // acc[0,0] = {1, width, epoch}; bytes "acc_n", "acc_a", "acc_g" at the fixed width.
    const Bytes32 kStateKey{};

    struct Loaded {
        std::uint64_t width{0};
        std::uint64_t epoch{0};
    };

    std::optional<Loaded> load_meta(ExecContext& ctx) {
        const Bytes32 meta = ctx.load(kAccumulatorVerifier, ctx.slot("acc", kStateKey.view(), 0));
        if (meta.is_zero()) return std::nullopt;
        return Loaded{unpack_u64(meta, 1), unpack_u64(meta, 2)};
    }

    BigInt load_big(ExecContext& ctx, std::string_view tag) {
        return crypto::from_bytes_be(load_bytes(ctx, tag, kStateKey.view(), kAccumulatorVerifier));
    }

    std::size_t width_of(const BigInt& modulus) { return crypto::byte_length(modulus); }

}  // namespace

void AccumulatorVerifier::execute(std::string_view operation, WordReader& args, ExecContext& ctx) const {
    if (operation == "set_state") {
        const BigInt value = args.big();
        const BigInt modulus = args.big();
        const BigInt generator = args.big();
        if (!ctx.has_role(ctx.caller(), Role::Governance)) {
            ExecContext::revert("unauthorized");
        }
        if (modulus < 3 || value < 1 || value >= modulus || generator < 2 || generator >= modulus) {
            ExecContext::revert("invalid state");
        }
        const std::size_t width = width_of(modulus);
        const auto previous = load_meta(ctx);
        const std::uint64_t epoch = previous ? previous->epoch + 1 : 1;
        ctx.store(ctx.slot("acc", kStateKey.view(), 0), pack_u64s({1, width, epoch}));
        store_bytes(ctx, "acc_n", kStateKey.view(), crypto::to_fixed_be(modulus, width));
        store_bytes(ctx, "acc_a", kStateKey.view(), crypto::to_fixed_be(value, width));
        store_bytes(ctx, "acc_g", kStateKey.view(), crypto::to_fixed_be(generator, width));
        ctx.emit("AccumulatorUpdated", WordWriter{}.u64(epoch).big(value, width).data());
        return;
    }
    if (operation == "verify_membership") {
        const BigInt witness = args.big();
        const BigInt prime = args.big();
        const auto meta = load_meta(ctx);
        if (!meta) {
            ExecContext::revert("no accumulator");
        }
        const BigInt modulus = load_big(ctx, "acc_n");
        const BigInt value = load_big(ctx, "acc_a");
        const bool member = ctx.modexp(witness, prime, modulus) == value;
        ctx.emit("MembershipChecked", WordWriter{}.big(prime, kPrimeWidth).boolean(member).data());
        ctx.set_output(WordWriter{}.boolean(member).data());
        return;
    }
    ExecContext::revert("unknown target");
}

namespace accver {

    ledger::Call set_state(const BigInt& value, const BigInt& modulus, const BigInt& generator) {
        const std::size_t width = width_of(modulus);
        return {std::string(kAccumulatorVerifier), "set_state",
                WordWriter{}.big(value, width).big(modulus, width).big(generator, width).data()};
    }

    ledger::Call verify_membership(const BigInt& witness, const BigInt& prime, const BigInt& modulus) {
        return {std::string(kAccumulatorVerifier), "verify_membership",
                WordWriter{}.big(witness, width_of(modulus)).big(prime, kPrimeWidth).data()};
    }

    bool decode_result(ByteView output) {
        WordReader in{output};
        return in.boolean();
    }

    std::optional<OnChainAccumulator> read_state(const ledger::ChainState& state) {
        auto ctx = inspect(state, kAccumulatorVerifier);
        const auto meta = load_meta(ctx);
        if (!meta) return std::nullopt;
        return OnChainAccumulator{load_big(ctx, "acc_a"), load_big(ctx, "acc_n"), load_big(ctx, "acc_g"), meta->epoch};
    }

}  // namespace accver

}  // namespace hybridsettle::contracts
