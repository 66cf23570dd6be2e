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

#include <hybridsettle/contracts/carbon.hpp>

#include <hybridsettle/contracts/storage.hpp>

namespace hybridsettle::contracts {

using ledger::ExecContext;
using ledger::Role;
using ledger::WordReader;
using ledger::WordWriter;

namespace {

    // asset[id,0] = {1, year, total}; asset[id,1] = type; asset[id,2] = owner count
    // owner[id,i] = account; holding[id||account,0] = {1, available, retired}
    // registry[0,0] = asset count; registry[0,i+1] = asset id
    const Bytes32 kRegistryKey{};

    std::string word_text(const Bytes32& w) {
        std::size_t len = 0;
        while (len < 32 && w[len] != 0) ++len;
        return {w.data(), w.data() + len};
    }

    struct Holding {
        bool exists{false};
        std::uint64_t available{0};
        std::uint64_t retired{0};
    };

    Bytes32 holding_slot(ExecContext& ctx, const Bytes32& id, std::string_view owner) {
        return ctx.slot("holding", concat({id.view(), as_bytes(owner)}));
    }

    Holding load_holding(ExecContext& ctx, const Bytes32& slot) {
        const Bytes32 w = ctx.load(kCarbon, slot);
        return w.is_zero() ? Holding{} : Holding{true, unpack_u64(w, 1), unpack_u64(w, 2)};
    }

    void store_holding(ExecContext& ctx, const Bytes32& slot, std::uint64_t available, std::uint64_t retired) {
        ctx.store(slot, pack_u64s({1, available, retired}));
    }

    std::optional<CarbonAsset> load_asset(ExecContext& ctx, const Bytes32& id) {
        const Bytes32 meta = ctx.load(kCarbon, ctx.slot("asset", id.view(), 0));
        if (meta.is_zero()) return std::nullopt;
        CarbonAsset a;
        a.asset_id = id;
        a.issuance_year = unpack_u64(meta, 1);
        a.total = unpack_u64(meta, 2);
        a.asset_type = word_text(ctx.load(kCarbon, ctx.slot("asset", id.view(), 1)));
        const std::uint64_t owners = ctx.load(kCarbon, ctx.slot("asset", id.view(), 2)).low_u64();
        for (std::uint64_t i = 0; i < owners; ++i) {
            const std::string owner = word_text(ctx.load(kCarbon, ctx.slot("owner", id.view(), i)));
            const Holding h = load_holding(ctx, holding_slot(ctx, id, owner));
            a.holdings.push_back({owner, h.available, h.retired});
        }
        return a;
    }

    void register_asset(WordReader& args, ExecContext& ctx) {
        const Bytes32 id = args.word();
        const std::string type = args.text();
        const std::uint64_t total = args.u64();
        const std::uint64_t year = args.u64();
        const std::string owner = args.text();
        if (!ctx.has_role(ctx.caller(), Role::Authority)) {
            ExecContext::revert("unauthorized");
        }
        if (total == 0) {
            ExecContext::revert("invalid amount");
        }
        if (type.empty() || type.size() > 32 || owner.empty() || owner.size() > ledger::kMaxAccountIdLength) {
            ExecContext::revert("invalid asset");
        }
        const Bytes32 meta_slot = ctx.slot("asset", id.view(), 0);
        if (!ctx.load(meta_slot).is_zero()) {
            ExecContext::revert("asset exists");
        }
        ctx.store(meta_slot, pack_u64s({1, year, total}));
        ctx.store(ctx.slot("asset", id.view(), 1), Bytes32::right_padded(type));
        ctx.store(ctx.slot("asset", id.view(), 2), Bytes32::from_u64(1));
        ctx.store(ctx.slot("owner", id.view(), 0), Bytes32::right_padded(owner));
        store_holding(ctx, holding_slot(ctx, id, owner), total, 0);

        const Bytes32 count_slot = ctx.slot("registry", kRegistryKey.view(), 0);
        const std::uint64_t count = ctx.load(count_slot).low_u64();
        ctx.store(ctx.slot("registry", kRegistryKey.view(), count + 1), id);
        ctx.store(count_slot, Bytes32::from_u64(count + 1));
        ctx.emit("AssetRegistered", WordWriter{}.word(id).text(type).u64(total).u64(year).text(owner).data());
    }

    void transfer(WordReader& args, ExecContext& ctx) {
        const Bytes32 id = args.word();
        const std::string to = args.text();
        const std::uint64_t amount = args.u64();
        if (amount == 0) {
            ExecContext::revert("invalid amount");
        }
        if (to.empty() || to.size() > ledger::kMaxAccountIdLength || to == ctx.caller()) {
            ExecContext::revert("invalid recipient");
        }
        if (ctx.load(ctx.slot("asset", id.view(), 0)).is_zero()) {
            ExecContext::revert("unknown asset");
        }
        const Bytes32 from_slot = holding_slot(ctx, id, ctx.caller());
        const Holding from = load_holding(ctx, from_slot);
        if (!from.exists) {
            ExecContext::revert("unauthorized");
        }
        if (amount > from.available) {
            ExecContext::revert("exceeds available");
        }
        const Bytes32 to_slot = holding_slot(ctx, id, to);
        const Holding dest = load_holding(ctx, to_slot);
        if (!dest.exists) {
            const Bytes32 count_slot = ctx.slot("asset", id.view(), 2);
            const std::uint64_t owners = ctx.load(count_slot).low_u64();
            ctx.store(ctx.slot("owner", id.view(), owners), Bytes32::right_padded(to));
            ctx.store(count_slot, Bytes32::from_u64(owners + 1));
        }
        store_holding(ctx, from_slot, from.available - amount, from.retired);
        store_holding(ctx, to_slot, dest.available + amount, dest.retired);
        ctx.emit("Transferred", WordWriter{}.word(id).text(ctx.caller()).text(to).u64(amount).data());
    }

    void retire(WordReader& args, ExecContext& ctx) {
        const Bytes32 id = args.word();
        const std::uint64_t amount = args.u64();
        if (amount == 0) {
            ExecContext::revert("invalid amount");
        }
        if (ctx.load(ctx.slot("asset", id.view(), 0)).is_zero()) {
            ExecContext::revert("unknown asset");
        }
        const Bytes32 slot = holding_slot(ctx, id, ctx.caller());
        const Holding h = load_holding(ctx, slot);
        if (!h.exists) {
            ExecContext::revert("unauthorized");
        }
        if (amount > h.available) {
            ExecContext::revert("exceeds available");
        }
        store_holding(ctx, slot, h.available - amount, h.retired + amount);
        ctx.emit("Retired", WordWriter{}.word(id).text(ctx.caller()).u64(amount).data());
    }

}  // namespace

std::uint64_t CarbonAsset::available_sum() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& h : holdings) sum += h.available;
    return sum;
}

std::uint64_t CarbonAsset::retired_sum() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& h : holdings) sum += h.retired;
    return sum;
}

void CarbonAssetRegistry::execute(std::string_view operation, WordReader& args, ExecContext& ctx) const {
    if (operation == "register") return register_asset(args, ctx);
    if (operation == "transfer") return transfer(args, ctx);
    if (operation == "retire") return retire(args, ctx);
    ExecContext::revert("unknown target");
}

namespace carbon {

    ledger::Call register_asset(const Bytes32& asset_id, std::string_view asset_type, std::uint64_t total,
                                std::uint64_t issuance_year, const ledger::AccountId& owner) {
        return {std::string(kCarbon), "register",
                WordWriter{}.word(asset_id).text(asset_type).u64(total).u64(issuance_year).text(owner).data()};
    }

    ledger::Call transfer(const Bytes32& asset_id, const ledger::AccountId& to, std::uint64_t amount) {
        return {std::string(kCarbon), "transfer", WordWriter{}.word(asset_id).text(to).u64(amount).data()};
    }

    ledger::Call retire(const Bytes32& asset_id, std::uint64_t amount) {
        return {std::string(kCarbon), "retire", WordWriter{}.word(asset_id).u64(amount).data()};
    }

    std::optional<CarbonAsset> read_asset(const ledger::ChainState& state, const Bytes32& asset_id) {
        auto ctx = inspect(state, kCarbon);
        return load_asset(ctx, asset_id);
    }

    std::vector<CarbonAsset> read_all(const ledger::ChainState& state) {
        auto ctx = inspect(state, kCarbon);
        const std::uint64_t count = ctx.load(ctx.slot("registry", kRegistryKey.view(), 0)).low_u64();
        std::vector<CarbonAsset> out;
        for (std::uint64_t i = 0; i < count; ++i) {
            const Bytes32 id = ctx.load(ctx.slot("registry", kRegistryKey.view(), i + 1));
            if (auto a = load_asset(ctx, id)) out.push_back(std::move(*a));
        }
        return out;
    }

}  // namespace carbon

}  // namespace hybridsettle::contracts
