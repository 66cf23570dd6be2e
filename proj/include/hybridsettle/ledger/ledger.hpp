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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <hybridsettle/crypto/bigint.hpp>
#include <hybridsettle/crypto/bytes.hpp>
#include <hybridsettle/crypto/signature.hpp>
#include <hybridsettle/ledger/gas.hpp>
#include <hybridsettle/ledger/words.hpp>

namespace hybridsettle::ledger {

using AccountId = std::string;

inline constexpr std::uint64_t kSecondsPerDay = 86400;
inline constexpr std::size_t kMaxAccountIdLength = 32;

enum class Role : std::uint64_t {
    Governance = 1,
    Authority = 2,
    Prosumer = 4,
    Auditor = 8,
};

std::string_view role_name(Role role) noexcept;

enum class TxStatus : std::uint8_t { Success, Reverted };

std::string_view status_name(TxStatus status) noexcept;

struct Event {
    std::string contract;
    std::string name;
    Bytes payload;

    friend bool operator==(const Event&, const Event&) = default;
};

struct TxReceipt {
    std::uint64_t tx_id{0};
    std::uint64_t clock{0};
    std::string contract;
    std::string operation;
    TxStatus status{TxStatus::Success};
    std::uint64_t gas_used{0};
    std::vector<Event> events;
    std::optional<std::string> revert_reason;
    Bytes output;

    [[nodiscard]] bool ok() const noexcept { return status == TxStatus::Success; }

    friend bool operator==(const TxReceipt&, const TxReceipt&) = default;
};

struct Call {
    std::string contract;
    std::string operation;
    Bytes args;

    // Four selector bytes plus the encoded arguments.
    [[nodiscard]] std::size_t calldata_size() const noexcept { return 4 + args.size(); }
};

// Thrown by contract code to abort the current transaction.
class Revert : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Store = std::map<Bytes32, Bytes32>;

struct ChainState {
    std::map<std::string, Store, std::less<>> stores;
    std::uint64_t clock{0};
    std::uint64_t cumulative_tx_today{0};
};

// keccak256 over the sorted contract stores. Clock and counters are excluded,
// so a reverted transaction leaves the digest untouched.
Digest32 state_digest(const ChainState& state);

// Advances the logical clock and clears the daily counter when a day boundary is crossed.
void advance_clock(ChainState& state, std::uint64_t seconds);

// Pure slot derivation: keccak256(tag || key || be64(index)).
Bytes32 derive_slot(std::string_view tag, ByteView key, std::uint64_t index = 0);

/// Metered view of chain storage for a single transaction or view call.
///
/// Writes are buffered and only reach the committed state when the ledger
/// commits a successful transaction.
class ExecContext {
  public:
    ExecContext(const ChainState& committed, const GasSchedule& schedule, const crypto::SignatureScheme& signatures,
                AccountId caller);

    [[nodiscard]] const AccountId& caller() const noexcept { return caller_; }
    [[nodiscard]] std::uint64_t clock() const noexcept { return committed_.clock; }
    [[nodiscard]] const GasSchedule& schedule() const noexcept { return schedule_; }
    [[nodiscard]] const std::string& contract() const noexcept { return contract_; }
    void enter(std::string contract) { contract_ = std::move(contract); }

    void charge(std::uint64_t gas) noexcept { gas_ += gas; }
    [[nodiscard]] std::uint64_t gas_used() const noexcept { return gas_; }

    Bytes32 load(const Bytes32& slot) { return load(contract_, slot); }
    Bytes32 load(std::string_view contract, const Bytes32& slot);
    void store(const Bytes32& slot, const Bytes32& value);

    // Metered slot derivation (one hash evaluation).
    Bytes32 slot(std::string_view tag, ByteView key, std::uint64_t index = 0);
    Digest32 keccak(ByteView data);
    crypto::BigInt modexp(const crypto::BigInt& base, const crypto::BigInt& exponent, const crypto::BigInt& modulus);
    bool verify_signature(const crypto::SignatureBundle& bundle);
    [[nodiscard]] const crypto::SignatureScheme& signatures() const noexcept { return signatures_; }

    void emit(std::string name, Bytes payload);
    void set_output(Bytes output) { output_ = std::move(output); }

    bool has_role(const AccountId& account, Role role);
    std::uint64_t role_mask(const AccountId& account);

    [[noreturn]] static void revert(const std::string& reason) { throw Revert(reason); }

    [[nodiscard]] const std::map<std::pair<std::string, Bytes32>, Bytes32>& writes() const noexcept { return writes_; }
    [[nodiscard]] std::vector<Event>& events() noexcept { return events_; }
    [[nodiscard]] Bytes& output() noexcept { return output_; }

  private:
    [[nodiscard]] Bytes32 peek(std::string_view contract, const Bytes32& slot) const;

    const ChainState& committed_;
    const GasSchedule& schedule_;
    const crypto::SignatureScheme& signatures_;
    AccountId caller_;
    std::string contract_;
    std::uint64_t gas_{0};
    std::map<std::pair<std::string, Bytes32>, Bytes32> writes_;
    std::vector<Event> events_;
    Bytes output_;
};

// Contracts hold no mutable members; all state lives in chain storage.
class Contract {
  public:
    virtual ~Contract() = default;
    [[nodiscard]] virtual std::string_view name() const noexcept = 0;
    // Throws Revert (or DecodeError, treated as a revert) to abort.
    virtual void execute(std::string_view operation, WordReader& args, ExecContext& ctx) const = 0;
};

struct ViewResult {
    bool reverted{false};
    std::optional<std::string> revert_reason;
    Bytes output;
    std::uint64_t gas_used{0};
};

/// Single-node, single-writer transaction engine.
///
/// Transactions run one at a time against a logical clock. Successful
/// transactions commit all buffered writes atomically; reverted ones
/// discard them. Every executed transaction increments the daily counter
/// that drives the capacity penalty.
class Ledger {
  public:
    static constexpr std::string_view kRolesContract = "roles";

    Ledger(GasSchedule schedule, const AccountId& governance,
           const crypto::SignatureScheme& signatures = crypto::default_signature_scheme());

    void deploy(std::shared_ptr<const Contract> contract);

    const TxReceipt& execute_tx(const AccountId& caller, const Call& call);

    // Runs `call` against the committed state without committing or counting it.
    [[nodiscard]] ViewResult view(const AccountId& caller, const Call& call) const;

    void advance_clock(std::uint64_t seconds) { hybridsettle::ledger::advance_clock(state_, seconds); }
    // Moves the clock forward to `clock`; no-op if it is already past.
    void advance_to(std::uint64_t clock);

    [[nodiscard]] Digest32 state_digest() const { return hybridsettle::ledger::state_digest(state_); }
    [[nodiscard]] const ChainState& state() const noexcept { return state_; }
    [[nodiscard]] const std::vector<TxReceipt>& receipts() const noexcept { return receipts_; }
    [[nodiscard]] const GasSchedule& schedule() const noexcept { return schedule_; }
    [[nodiscard]] const crypto::SignatureScheme& signatures() const noexcept { return *signatures_; }
    [[nodiscard]] std::uint64_t clock() const noexcept { return state_.clock; }
    [[nodiscard]] std::uint64_t day() const noexcept { return state_.clock / kSecondsPerDay; }
    [[nodiscard]] std::uint64_t cumulative_tx_today() const noexcept { return state_.cumulative_tx_today; }

    [[nodiscard]] bool has_role(const AccountId& account, Role role) const;

    // Drops stored receipts (counters and tx ids continue); keeps long runs lean.
    void clear_receipts() noexcept { receipts_.clear(); }

  private:
    void run(ExecContext& ctx, const Call& call) const;

    GasSchedule schedule_;
    const crypto::SignatureScheme* signatures_;
    ChainState state_;
    std::map<std::string, std::shared_ptr<const Contract>, std::less<>> contracts_;
    std::vector<TxReceipt> receipts_;
    std::uint64_t next_tx_id_{1};
};

// Role administration call descriptors, executed by a governance account.
Call grant_role(const AccountId& account, Role role);
Call revoke_role(const AccountId& account, Role role);

// Line-delimited receipt log:
// tx_id,clock,contract,operation,status,gas_used,revert_reason
void write_receipt_log(std::ostream& out, std::span<const TxReceipt> receipts);

}  // namespace hybridsettle::ledger
