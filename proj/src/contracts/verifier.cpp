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

#include <hybridsettle/contracts/verifier.hpp>

#include <hybridsettle/contracts/storage.hpp>

namespace hybridsettle::contracts {

using ledger::ExecContext;
using ledger::WordReader;
using ledger::WordWriter;

// Layout per commitment id:
//   commit[id,0] value, commit[id,1] {1, kind, count, clock}, commit[id,2] committer
std::optional<Commitment> OnOffChainVerifier::lookup(ExecContext& ctx, const Bytes32& id) {
    const Bytes32 meta = ctx.load(kVerifier, ctx.slot("commit", id.view(), 1));
    if (meta.is_zero()) return std::nullopt;
    Commitment c;
    c.id = id;
    c.kind = static_cast<CommitmentKind>(unpack_u64(meta, 1));
    c.declared_count = unpack_u64(meta, 2);
    c.clock = unpack_u64(meta, 3);
    c.value = ctx.load(kVerifier, ctx.slot("commit", id.view(), 0));
    const Bytes32 committer = ctx.load(kVerifier, ctx.slot("commit", id.view(), 2));
    const auto* begin = committer.data();
    const auto* end = begin;
    while (end != begin + 32 && *end != 0) ++end;
    c.committer.assign(begin, end);
    return c;
}

void OnOffChainVerifier::execute(std::string_view operation, WordReader& args, ExecContext& ctx) const {
    if (operation == "commit") {
        const Bytes32 id = args.word();
        const std::uint64_t kind = args.u64();
        const Digest32 value = args.word();
        const std::uint64_t count = args.u64();
        if (ctx.role_mask(ctx.caller()) == 0) {
            ExecContext::revert("unauthorized");
        }
        if (kind > 1 || count == 0 || (kind == 0 && count != 1)) {
            ExecContext::revert("invalid commitment");
        }
        const Bytes32 meta_slot = ctx.slot("commit", id.view(), 1);
        if (!ctx.load(meta_slot).is_zero()) {
            ExecContext::revert("commitment exists");
        }
        ctx.store(ctx.slot("commit", id.view(), 0), value);
        ctx.store(meta_slot, pack_u64s({1, kind, count, ctx.clock()}));
        ctx.store(ctx.slot("commit", id.view(), 2), Bytes32::right_padded(ctx.caller()));
        ctx.emit("Committed", WordWriter{}.word(id).u64(kind).word(value).u64(count).data());
        return;
    }
    if (operation == "get") {
        const Bytes32 id = args.word();
        const auto c = lookup(ctx, id);
        WordWriter out;
        out.boolean(c.has_value());
        if (c) {
            out.word(c->id).u64(static_cast<std::uint64_t>(c->kind)).word(c->value).u64(c->declared_count);
            out.text(c->committer).u64(c->clock);
        }
        ctx.set_output(std::move(out).take());
        return;
    }
    ExecContext::revert("unknown target");
}

namespace verifier {

    ledger::Call commit(const Bytes32& id, CommitmentKind kind, const Digest32& value, std::uint64_t count) {
        return {std::string(kVerifier), "commit",
                WordWriter{}.word(id).u64(static_cast<std::uint64_t>(kind)).word(value).u64(count).data()};
    }

    ledger::Call get(const Bytes32& id) { return {std::string(kVerifier), "get", WordWriter{}.word(id).data()}; }

    std::optional<Commitment> decode_get(ByteView output) {
        WordReader in{output};
        if (!in.boolean()) return std::nullopt;
        Commitment c;
        c.id = in.word();
        c.kind = static_cast<CommitmentKind>(in.u64());
        c.value = in.word();
        c.declared_count = in.u64();
        c.committer = in.text();
        c.clock = in.u64();
        return c;
    }

    std::optional<Commitment> get(const ledger::Ledger& ledger, const Bytes32& id, const ledger::AccountId& reader) {
        const ledger::ViewResult r = ledger.view(reader, get(id));
        if (r.reverted) return std::nullopt;
        return decode_get(r.output);
    }

}  // namespace verifier

}  // namespace hybridsettle::contracts
