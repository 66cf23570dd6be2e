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

#include <hybridsettle/ledger/ledger.hpp>

#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::ledger {

namespace {

    // Built-in role table: slot derive_slot("role", account) holds a bitmask of Role values.
    class RoleRegistry final : public Contract {
      public:
        [[nodiscard]] std::string_view name() const noexcept override { return Ledger::kRolesContract; }

        void execute(std::string_view operation, WordReader& args, ExecContext& ctx) const override {
            if (operation != "grant" && operation != "revoke") {
                ExecContext::revert("unknown target");
            }
            const std::string account = args.text();
            const std::uint64_t mask = args.u64();
            if (account.empty() || account.size() > kMaxAccountIdLength || mask == 0 || mask > 15) {
                ExecContext::revert("invalid role");
            }
            if (!ctx.has_role(ctx.caller(), Role::Governance)) {
                ExecContext::revert("unauthorized");
            }
            const Bytes32 slot = ctx.slot("role", as_bytes(account));
            const std::uint64_t current = ctx.load(slot).low_u64();
            const std::uint64_t next = operation == "grant" ? (current | mask) : (current & ~mask);
            ctx.store(slot, Bytes32::from_u64(next));
            ctx.emit(operation == "grant" ? "RoleGranted" : "RoleRevoked", WordWriter{}.text(account).u64(mask).data());
        }
    };

    void check_account(const AccountId& account) {
        if (account.empty() || account.size() > kMaxAccountIdLength) {
            throw std::invalid_argument("account ids must be 1..32 bytes: '" + account + "'");
        }
    }

}  // namespace

std::string_view role_name(Role role) noexcept {
    switch (role) {
        case Role::Governance: return "governance";
        case Role::Authority: return "authority";
        case Role::Prosumer: return "prosumer";
        case Role::Auditor: return "auditor";
    }
    return "unknown";
}

std::string_view status_name(TxStatus status) noexcept {
    return status == TxStatus::Success ? "success" : "reverted";
}

Digest32 state_digest(const ChainState& state) {
    crypto::Keccak256 hasher;
    Bytes header;
    for (const auto& [name, store] : state.stores) {
        if (store.empty()) continue;
        header.clear();
        append_u64_be(header, name.size());
        append(header, as_bytes(name));
        append_u64_be(header, store.size());
        hasher.update(header);
        for (const auto& [slot, value] : store) {
            hasher.update(slot.view()).update(value.view());
        }
    }
    return hasher.finalize();
}

void advance_clock(ChainState& state, std::uint64_t seconds) {
    const std::uint64_t before = state.clock / kSecondsPerDay;
    state.clock += seconds;
    if (state.clock / kSecondsPerDay != before) {
        state.cumulative_tx_today = 0;
    }
}

Bytes32 derive_slot(std::string_view tag, ByteView key, std::uint64_t index) {
    Bytes suffix;
    append_u64_be(suffix, index);
    return crypto::Keccak256{}.update(tag).update(key).update(suffix).finalize();
}

ExecContext::ExecContext(const ChainState& committed, const GasSchedule& schedule,
                         const crypto::SignatureScheme& signatures, AccountId caller)
    : committed_{committed}, schedule_{schedule}, signatures_{signatures}, caller_{std::move(caller)} {}

Bytes32 ExecContext::peek(std::string_view contract, const Bytes32& slot) const {
    if (const auto it = writes_.find({std::string(contract), slot}); it != writes_.end()) {
        return it->second;
    }
    const auto store = committed_.stores.find(contract);
    if (store == committed_.stores.end()) return {};
    const auto it = store->second.find(slot);
    return it == store->second.end() ? Bytes32{} : it->second;
}

Bytes32 ExecContext::load(std::string_view contract, const Bytes32& slot) {
    charge(schedule_.storage_read);
    return peek(contract, slot);
}

void ExecContext::store(const Bytes32& slot, const Bytes32& value) {
    const bool fresh = peek(contract_, slot).is_zero() && !value.is_zero();
    charge(fresh ? schedule_.storage_write_new : schedule_.storage_write_update);
    writes_[{contract_, slot}] = value;
}

Bytes32 ExecContext::slot(std::string_view tag, ByteView key, std::uint64_t index) {
    charge(schedule_.hash_op);
    return derive_slot(tag, key, index);
}

Digest32 ExecContext::keccak(ByteView data) {
    charge(schedule_.hash_op);
    return crypto::keccak256(data);
}

crypto::BigInt ExecContext::modexp(const crypto::BigInt& base, const crypto::BigInt& exponent,
                                   const crypto::BigInt& modulus) {
    charge(schedule_.modexp_fixed);
    return crypto::modexp(base, exponent, modulus);
}

bool ExecContext::verify_signature(const crypto::SignatureBundle& bundle) {
    charge(schedule_.sig_verify);
    return signatures_.verify(bundle);
}

void ExecContext::emit(std::string name, Bytes payload) {
    charge(schedule_.event_base + schedule_.event_byte * payload.size());
    events_.push_back(Event{contract_, std::move(name), std::move(payload)});
}

std::uint64_t ExecContext::role_mask(const AccountId& account) {
    return load(Ledger::kRolesContract, slot("role", as_bytes(account))).low_u64();
}

bool ExecContext::has_role(const AccountId& account, Role role) {
    return (role_mask(account) & static_cast<std::uint64_t>(role)) != 0;
}

Ledger::Ledger(GasSchedule schedule, const AccountId& governance, const crypto::SignatureScheme& signatures)
    : schedule_{schedule}, signatures_{&signatures} {
    check_account(governance);
    deploy(std::make_shared<RoleRegistry>());
    state_.stores[std::string(kRolesContract)][derive_slot("role", as_bytes(governance))] =
        Bytes32::from_u64(static_cast<std::uint64_t>(Role::Governance));
}

void Ledger::deploy(std::shared_ptr<const Contract> contract) {
    std::string name(contract->name());
    if (contracts_.contains(name)) {
        throw std::invalid_argument("contract already deployed: " + name);
    }
    contracts_.emplace(std::move(name), std::move(contract));
}

void Ledger::run(ExecContext& ctx, const Call& call) const {
    const auto it = contracts_.find(call.contract);
    if (it == contracts_.end()) {
        ExecContext::revert("unknown target");
    }
    ctx.enter(call.contract);
    WordReader reader{call.args};
    it->second->execute(call.operation, reader, ctx);
}

const TxReceipt& Ledger::execute_tx(const AccountId& caller, const Call& call) {
    check_account(caller);
    state_.cumulative_tx_today += 1;

    ExecContext ctx{state_, schedule_, *signatures_, caller};
    ctx.charge(schedule_.tx_base + schedule_.calldata_byte * call.calldata_size());

    TxReceipt receipt;
    receipt.tx_id = next_tx_id_++;
    receipt.clock = state_.clock;
    receipt.contract = call.contract;
    receipt.operation = call.operation;
    try {
        run(ctx, call);
        receipt.status = TxStatus::Success;
    } catch (const Revert& e) {
        receipt.status = TxStatus::Reverted;
        receipt.revert_reason = e.what();
    } catch (const DecodeError& e) {
        receipt.status = TxStatus::Reverted;
        receipt.revert_reason = e.what();
    }
    receipt.gas_used = apply_capacity_penalty(ctx.gas_used(), state_.cumulative_tx_today, schedule_);

    if (receipt.ok()) {
        for (const auto& [key, value] : ctx.writes()) {
            Store& store = state_.stores[key.first];
            if (value.is_zero()) {
                store.erase(key.second);
            } else {
                store[key.second] = value;
            }
        }
        receipt.events = std::move(ctx.events());
        receipt.output = std::move(ctx.output());
    }
    receipts_.push_back(std::move(receipt));
    return receipts_.back();
}

ViewResult Ledger::view(const AccountId& caller, const Call& call) const {
    ExecContext ctx{state_, schedule_, *signatures_, caller};
    ViewResult result;
    try {
        run(ctx, call);
        result.output = std::move(ctx.output());
    } catch (const Revert& e) {
        result.reverted = true;
        result.revert_reason = e.what();
    } catch (const DecodeError& e) {
        result.reverted = true;
        result.revert_reason = e.what();
    }
    result.gas_used = ctx.gas_used();
    return result;
}

void Ledger::advance_to(std::uint64_t clock) {
    if (clock > state_.clock) {
        advance_clock(clock - state_.clock);
    }
}

bool Ledger::has_role(const AccountId& account, Role role) const {
    const auto store = state_.stores.find(kRolesContract);
    if (store == state_.stores.end()) return false;
    const auto it = store->second.find(derive_slot("role", as_bytes(account)));
    return it != store->second.end() && (it->second.low_u64() & static_cast<std::uint64_t>(role)) != 0;
}

Call grant_role(const AccountId& account, Role role) {
    return Call{std::string(Ledger::kRolesContract), "grant",
                WordWriter{}.text(account).u64(static_cast<std::uint64_t>(role)).data()};
}

Call revoke_role(const AccountId& account, Role role) {
    return Call{std::string(Ledger::kRolesContract), "revoke",
                WordWriter{}.text(account).u64(static_cast<std::uint64_t>(role)).data()};
}

void write_receipt_log(std::ostream& out, std::span<const TxReceipt> receipts) {
    out << "tx_id,clock,contract,operation,status,gas_used,revert_reason\n";
    for (const TxReceipt& r : receipts) {
        out << r.tx_id << ',' << r.clock << ',' << r.contract << ',' << r.operation << ','
            << status_name(r.status) << ',' << r.gas_used << ',' << r.revert_reason.value_or("") << '\n';
    }
}

}  // namespace hybridsettle::ledger
