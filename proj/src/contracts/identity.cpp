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

#include <hybridsettle/contracts/identity.hpp>

#include <algorithm>

#include <hybridsettle/contracts/storage.hpp>
#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::contracts {

using ledger::ExecContext;
using ledger::WordReader;
using ledger::WordWriter;

namespace {

    // Per DID key k = keccak256(did):
    //   did[k,0] controller, did[k,1] {1, last_auth_clock}, did[k,2] last bucket + 1, did[k,3] history length
    //   bytes did_key[k] active key; bytes did_hist[k||i] rotated-in key; did_hist_clock[k,i] clock
    // Per holder key k:
    //   root[k,0] root, root[k,1] {1, clock}; nonce[k||nonce] = 1 once consumed

    std::string word_text(const Bytes32& w) {
        std::size_t len = 0;
        while (len < 32 && w[len] != 0) ++len;
        return {w.data(), w.data() + len};
    }

    struct DidCore {
        Digest32 key;
        ledger::AccountId controller;
        std::optional<std::uint64_t> last_auth;
    };

    std::optional<DidCore> load_core(ExecContext& ctx, std::string_view did) {
        const Digest32 key = ctx.keccak(as_bytes(did));
        const Bytes32 controller = ctx.load(kDidRegistry, ctx.slot("did", key.view(), 0));
        if (controller.is_zero()) return std::nullopt;
        DidCore core{key, word_text(controller), std::nullopt};
        const Bytes32 auth = ctx.load(kDidRegistry, ctx.slot("did", key.view(), 1));
        if (!auth.is_zero()) core.last_auth = unpack_u64(auth, 1);
        return core;
    }

    bool fresh_auth(const DidCore& core, std::uint64_t now, std::uint64_t window) {
        return core.last_auth && now >= *core.last_auth && now - *core.last_auth <= window;
    }

    void check_did(std::string_view did) {
        if (did.empty() || did.size() > kMaxDidLength) {
            ExecContext::revert("invalid did");
        }
    }

    void append_history(ExecContext& ctx, const Digest32& key, ByteView public_key) {
        const Bytes32 count_slot = ctx.slot("did", key.view(), 3);
        const std::uint64_t count = ctx.load(count_slot).low_u64();
        Bytes hist_key = concat({key.view()});
        append_u64_be(hist_key, count);
        store_bytes(ctx, "did_hist", hist_key, public_key);
        ctx.store(ctx.slot("did_hist_clock", key.view(), count), pack_u64s({1, ctx.clock()}));
        ctx.store(count_slot, Bytes32::from_u64(count + 1));
    }

    crypto::MerkleProof read_proof(WordReader& args) {
        crypto::MerkleProof proof;
        proof.leaf_index = args.u64();
        proof.tree_size = args.u64();
        const std::uint64_t n = args.u64();
        if (n > 64) {
            throw ledger::DecodeError("malformed calldata");
        }
        for (std::uint64_t i = 0; i < n; ++i) proof.siblings.push_back(args.word());
        return proof;
    }

}  // namespace

Bytes did_rotation_message(std::string_view did, ByteView new_key) {
    return WordWriter{}.text("rotate").text(did).bytes(new_key).data();
}

Bytes did_auth_message(std::string_view did, std::uint64_t bucket) {
    return WordWriter{}.text("authenticate").text(did).u64(bucket).data();
}

Bytes disclosure_authorization_message(std::string_view requester_did, const Digest32& leaf, std::uint64_t nonce) {
    Bytes out = concat({as_bytes(requester_did), leaf.view()});
    append_u64_be(out, nonce);
    return out;
}

Digest32 attribute_leaf(std::string_view key, std::string_view value, const std::array<std::uint8_t, 16>& salt) {
    const std::uint8_t separator = 0;
    return crypto::Keccak256{}.update(key).update(ByteView{&separator, 1}).update(value).update(salt).finalize();
}

void DidRegistry::execute(std::string_view operation, WordReader& args, ExecContext& ctx) const {
    if (operation == "register") {
        const std::string did = args.text();
        const Bytes public_key = args.bytes();
        check_did(did);
        if (public_key.empty() || public_key.size() > 256) {
            ExecContext::revert("invalid key");
        }
        if (ctx.role_mask(ctx.caller()) == 0) {
            ExecContext::revert("unauthorized");
        }
        const Digest32 key = ctx.keccak(as_bytes(did));
        const Bytes32 controller_slot = ctx.slot("did", key.view(), 0);
        if (!ctx.load(controller_slot).is_zero()) {
            ExecContext::revert("did exists");
        }
        ctx.store(controller_slot, Bytes32::right_padded(ctx.caller()));
        store_bytes(ctx, "did_key", key.view(), public_key);
        append_history(ctx, key, public_key);
        ctx.emit("DidRegistered", WordWriter{}.text(did).text(ctx.caller()).bytes(public_key).data());
        return;
    }
    if (operation == "rotate") {
        const std::string did = args.text();
        const Bytes new_key = args.bytes();
        const Bytes signature = args.bytes();
        check_did(did);
        if (new_key.empty() || new_key.size() > 256) {
            ExecContext::revert("invalid key");
        }
        const auto core = load_core(ctx, did);
        if (!core) {
            ExecContext::revert("unknown did");
        }
        const Bytes active = load_bytes(ctx, "did_key", core->key.view());
        if (!ctx.verify_signature({active, did_rotation_message(did, new_key), signature})) {
            ExecContext::revert("bad rotation");
        }
        store_bytes(ctx, "did_key", core->key.view(), new_key);
        append_history(ctx, core->key, new_key);
        ctx.emit("KeyRotated", WordWriter{}.text(did).bytes(new_key).u64(ctx.clock()).data());
        return;
    }
    if (operation == "authenticate") {
        const std::string did = args.text();
        const Bytes signature = args.bytes();
        check_did(did);
        const auto core = load_core(ctx, did);
        if (!core) {
            ExecContext::revert("unknown did");
        }
        const std::uint64_t bucket = ctx.clock() / kAuthBucketSeconds;
        const Bytes32 bucket_slot = ctx.slot("did", core->key.view(), 2);
        if (ctx.load(bucket_slot).low_u64() == bucket + 1) {
            ExecContext::revert("auth replay");
        }
        const Bytes active = load_bytes(ctx, "did_key", core->key.view());
        if (!ctx.verify_signature({active, did_auth_message(did, bucket), signature})) {
            ExecContext::revert("auth failed");
        }
        ctx.store(bucket_slot, Bytes32::from_u64(bucket + 1));
        ctx.store(ctx.slot("did", core->key.view(), 1), pack_u64s({1, ctx.clock()}));
        ctx.emit("Authenticated", WordWriter{}.text(did).u64(ctx.clock()).data());
        return;
    }
    ExecContext::revert("unknown target");
}

void SelectiveDisclosure::execute(std::string_view operation, WordReader& args, ExecContext& ctx) const {
    if (operation == "commit_root") {
        const std::string holder = args.text();
        const Digest32 root = args.word();
        check_did(holder);
        const auto core = load_core(ctx, holder);
        if (!core || core->controller != ctx.caller() || !fresh_auth(*core, ctx.clock(), auth_window_)) {
            ExecContext::revert("auth required");
        }
        ctx.store(ctx.slot("root", core->key.view(), 0), root);
        ctx.store(ctx.slot("root", core->key.view(), 1), pack_u64s({1, ctx.clock()}));
        ctx.emit("RootCommitted", WordWriter{}.text(holder).word(root).u64(ctx.clock()).data());
        return;
    }
    if (operation == "verify_attribute") {
        const std::string requester = args.text();
        const std::string holder = args.text();
        const Digest32 leaf = args.word();
        const crypto::MerkleProof proof = read_proof(args);
        crypto::SignatureBundle authorization;
        authorization.public_key = args.bytes();
        authorization.message = args.bytes();
        authorization.signature = args.bytes();

        // Gate 1: identity. Nothing below runs for an unauthenticated requester.
        const auto requester_core = load_core(ctx, requester);
        if (!requester_core || requester_core->controller != ctx.caller() ||
            !fresh_auth(*requester_core, ctx.clock(), auth_window_)) {
            ExecContext::revert("identity gate");
        }

        // Gate 2: holder authorization, then proof against the latest root.
        const auto holder_core = load_core(ctx, holder);
        bool authorized = false;
        std::uint64_t nonce = 0;
        Bytes32 nonce_slot;
        if (holder_core) {
            const Bytes active = load_bytes(ctx, "did_key", holder_core->key.view(), kDidRegistry);
            const Bytes expected_prefix = concat({as_bytes(requester), leaf.view()});
            const ByteView message{authorization.message};
            const bool layout_ok = message.size() == expected_prefix.size() + 8 &&
                                   std::equal(expected_prefix.begin(), expected_prefix.end(), message.begin());
            if (authorization.public_key == active && layout_ok) {
                nonce = read_u64_be(message.subspan(expected_prefix.size()));
                Bytes nonce_key = concat({holder_core->key.view()});
                append_u64_be(nonce_key, nonce);
                nonce_slot = ctx.slot("nonce", nonce_key);
                authorized = ctx.load(nonce_slot).is_zero() && ctx.verify_signature(authorization);
            }
        }
        bool proof_ok = false;
        if (authorized) {
            ctx.store(nonce_slot, Bytes32::from_u64(1));
            const Digest32 root = ctx.load(ctx.slot("root", holder_core->key.view(), 0));
            if (!root.is_zero()) {
                ctx.charge(ctx.schedule().hash_op * proof.siblings.size());
                proof_ok = crypto::merkle_verify(root, leaf, proof);
            }
        }
        const bool result = authorized && proof_ok;
        ctx.emit("AttributeVerified", WordWriter{}.text(requester).text(holder).word(leaf).boolean(result).data());
        ctx.set_output(WordWriter{}.boolean(result).data());
        return;
    }
    ExecContext::revert("unknown target");
}

namespace did {

    ledger::Call register_did(std::string_view did, ByteView public_key) {
        return {std::string(kDidRegistry), "register", WordWriter{}.text(did).bytes(public_key).data()};
    }

    ledger::Call rotate(std::string_view did, ByteView new_key, ByteView signature) {
        return {std::string(kDidRegistry), "rotate", WordWriter{}.text(did).bytes(new_key).bytes(signature).data()};
    }

    ledger::Call authenticate(std::string_view did, ByteView signature) {
        return {std::string(kDidRegistry), "authenticate", WordWriter{}.text(did).bytes(signature).data()};
    }

    std::optional<DidEntry> read_entry(const ledger::ChainState& state, std::string_view did) {
        auto ctx = inspect(state, kDidRegistry);
        const auto core = load_core(ctx, did);
        if (!core) return std::nullopt;
        DidEntry entry{std::string(did), core->controller, load_bytes(ctx, "did_key", core->key.view()),
                       core->last_auth, {}};
        const std::uint64_t count = ctx.load(ctx.slot("did", core->key.view(), 3)).low_u64();
        for (std::uint64_t i = 0; i < count; ++i) {
            Bytes hist_key = concat({core->key.view()});
            append_u64_be(hist_key, i);
            const Bytes32 clock = ctx.load(ctx.slot("did_hist_clock", core->key.view(), i));
            entry.key_history.push_back({load_bytes(ctx, "did_hist", hist_key), unpack_u64(clock, 1)});
        }
        return entry;
    }

}  // namespace did

namespace sd {

    ledger::Call commit_root(std::string_view holder_did, const Digest32& root) {
        return {std::string(kDisclosure), "commit_root", WordWriter{}.text(holder_did).word(root).data()};
    }

    ledger::Call verify_attribute(std::string_view requester_did, std::string_view holder_did, const Digest32& leaf,
                                  const crypto::MerkleProof& proof, const crypto::SignatureBundle& authorization) {
        WordWriter w;
        w.text(requester_did).text(holder_did).word(leaf);
        w.u64(proof.leaf_index).u64(proof.tree_size).u64(proof.siblings.size());
        for (const Digest32& s : proof.siblings) w.word(s);
        w.bytes(authorization.public_key).bytes(authorization.message).bytes(authorization.signature);
        return {std::string(kDisclosure), "verify_attribute", std::move(w).take()};
    }

    bool decode_result(ByteView output) {
        WordReader in{output};
        return in.boolean();
    }

    std::optional<AttributeCommitment> read_root(const ledger::ChainState& state, std::string_view holder_did) {
        auto ctx = inspect(state, kDisclosure);
        const Digest32 key = crypto::keccak256(as_bytes(holder_did));
        const Bytes32 meta = ctx.load(ctx.slot("root", key.view(), 1));
        if (meta.is_zero()) return std::nullopt;
        return AttributeCommitment{std::string(holder_did), ctx.load(ctx.slot("root", key.view(), 0)),
                                   unpack_u64(meta, 1)};
    }

}  // namespace sd

}  // namespace hybridsettle::contracts
