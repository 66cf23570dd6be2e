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

#include <hybridsettle/contracts/trading.hpp>

#include <hybridsettle/contracts/storage.hpp>
#include <hybridsettle/contracts/verifier.hpp>

namespace hybridsettle::contracts {

using ledger::ExecContext;
using ledger::Role;
using ledger::WordReader;
using ledger::WordWriter;

namespace {

    // order[id,0] = {status, side, quantity, price}; order[id,1] = region (16) | keccak(owner)[0..16]
    std::optional<Order> load_order(ExecContext& ctx, const Bytes32& id) {
        const Bytes32 head = ctx.load(kTrading, ctx.slot("order", id.view(), 0));
        if (head.is_zero()) return std::nullopt;
        const Bytes32 tail = ctx.load(kTrading, ctx.slot("order", id.view(), 1));
        Order o;
        o.order_id = id;
        o.status = static_cast<OrderStatus>(unpack_u64(head, 0));
        o.side = static_cast<Side>(unpack_u64(head, 1));
        o.quantity_kwh = unpack_u64(head, 2);
        o.price_milli = unpack_u64(head, 3);
        std::size_t len = 0;
        while (len < kMaxRegionLength && tail[len] != 0) ++len;
        o.region.assign(tail.data(), tail.data() + len);
        return o;
    }

    void set_status(ExecContext& ctx, const Order& o, OrderStatus status) {
        ctx.store(ctx.slot("order", o.order_id.view(), 0),
                  pack_u64s({static_cast<std::uint64_t>(status), static_cast<std::uint64_t>(o.side), o.quantity_kwh,
                             o.price_milli}));
    }

}  // namespace

void EnergyTrading::execute(std::string_view operation, WordReader& args, ExecContext& ctx) const {
    if (operation == "place_order") {
        const Bytes32 id = args.word();
        const std::uint64_t side = args.u64();
        const std::uint64_t quantity = args.u64();
        const std::uint64_t price = args.u64();
        const std::string region = args.text();
        if (!ctx.has_role(ctx.caller(), Role::Prosumer)) {
            ExecContext::revert("unauthorized");
        }
        if (side > 1 || quantity == 0 || price == 0 || region.empty() || region.size() > kMaxRegionLength) {
            ExecContext::revert("invalid order");
        }
        const Bytes32 head_slot = ctx.slot("order", id.view(), 0);
        if (!ctx.load(head_slot).is_zero()) {
            ExecContext::revert("order exists");
        }
        ctx.store(head_slot,
                  pack_u64s({static_cast<std::uint64_t>(OrderStatus::Open), side, quantity, price}));
        Bytes32 tail = Bytes32::right_padded(region);
        const Digest32 owner = ctx.keccak(as_bytes(ctx.caller()));
        std::copy(owner.data(), owner.data() + 16, tail.data() + 16);
        ctx.store(ctx.slot("order", id.view(), 1), tail);
        ctx.emit("OrderPlaced", WordWriter{}.word(id).u64(side).u64(quantity).u64(price).text(region).data());
        return;
    }
    if (operation == "settle") {
        const Bytes32 buy_id = args.word();
        const Bytes32 sell_id = args.word();
        const Bytes32 commitment_id = args.word();
        if (ctx.role_mask(ctx.caller()) == 0) {
            ExecContext::revert("unauthorized");
        }
        const auto buy = load_order(ctx, buy_id);
        const auto sell = load_order(ctx, sell_id);
        if (!buy || !sell) {
            ExecContext::revert("unknown order");
        }
        if (buy->status != OrderStatus::Open || sell->status != OrderStatus::Open) {
            ExecContext::revert("order closed");
        }
        if (buy->side != Side::Buy || sell->side != Side::Sell || buy->region != sell->region ||
            buy->quantity_kwh != sell->quantity_kwh) {
            ExecContext::revert("no match");
        }
        if (!OnOffChainVerifier::lookup(ctx, commitment_id)) {
            ExecContext::revert("no anchor");
        }
        set_status(ctx, *buy, OrderStatus::Settled);
        set_status(ctx, *sell, OrderStatus::Settled);
        ctx.emit("Settled", WordWriter{}.word(buy_id).word(sell_id).word(commitment_id).data());
        return;
    }
    ExecContext::revert("unknown target");
}

namespace trading {

    ledger::Call place_order(const Bytes32& order_id, Side side, std::uint64_t quantity_kwh,
                             std::uint64_t price_milli, std::string_view region) {
        return {std::string(kTrading), "place_order",
                WordWriter{}
                    .word(order_id)
                    .u64(static_cast<std::uint64_t>(side))
                    .u64(quantity_kwh)
                    .u64(price_milli)
                    .text(region)
                    .data()};
    }

    ledger::Call settle(const Bytes32& buy_order, const Bytes32& sell_order, const Bytes32& commitment_id) {
        return {std::string(kTrading), "settle", WordWriter{}.word(buy_order).word(sell_order).word(commitment_id).data()};
    }

    std::optional<Order> read_order(const ledger::ChainState& state, const Bytes32& order_id) {
        auto ctx = inspect(state, kTrading);
        return load_order(ctx, order_id);
    }

}  // namespace trading

}  // namespace hybridsettle::contracts
