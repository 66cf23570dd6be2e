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

#include <hybridsettle/contracts/storage.hpp>

#include <algorithm>

namespace hybridsettle::contracts {

void store_bytes(ledger::ExecContext& ctx, std::string_view tag, ByteView key, ByteView value) {
    ctx.store(ctx.slot(tag, key, 0), Bytes32::from_u64(value.size()));
    for (std::size_t offset = 0, i = 1; offset < value.size(); offset += 32, ++i) {
        const std::size_t take = std::min<std::size_t>(32, value.size() - offset);
        ctx.store(ctx.slot(tag, key, i), Bytes32::right_padded(value.subspan(offset, take)));
    }
}

Bytes load_bytes(ledger::ExecContext& ctx, std::string_view tag, ByteView key, std::string_view contract) {
    const std::string_view owner = contract.empty() ? std::string_view(ctx.contract()) : contract;
    const std::uint64_t len = ctx.load(owner, ctx.slot(tag, key, 0)).low_u64();
    Bytes out;
    out.reserve(len);
    for (std::size_t offset = 0, i = 1; offset < len; offset += 32, ++i) {
        const Bytes32 word = ctx.load(owner, ctx.slot(tag, key, i));
        const std::size_t take = std::min<std::size_t>(32, len - offset);
        out.insert(out.end(), word.data(), word.data() + take);
    }
    return out;
}

Bytes32 pack_u64s(std::initializer_list<std::uint64_t> fields) {
    Bytes32 word;
    std::size_t pos = 0;
    for (const std::uint64_t f : fields) {
        for (int shift = 56; shift >= 0; shift -= 8) {
            word[pos++] = static_cast<std::uint8_t>(f >> shift);
        }
    }
    return word;
}

std::uint64_t unpack_u64(const Bytes32& word, std::size_t field) { return read_u64_be(word.view().subspan(8 * field, 8)); }

Bytes concat(std::initializer_list<ByteView> parts) {
    Bytes out;
    for (const ByteView p : parts) append(out, p);
    return out;
}

ledger::ExecContext inspect(const ledger::ChainState& state, std::string_view contract) {
    static const ledger::GasSchedule kFree{};
    ledger::ExecContext ctx{state, kFree, crypto::default_signature_scheme(), "inspector"};
    ctx.enter(std::string(contract));
    return ctx;
}

}  // namespace hybridsettle::contracts
