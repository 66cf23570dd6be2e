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

#include <hybridsettle/exp/experiments.hpp>

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include <hybridsettle/contracts/deploy.hpp>
#include <hybridsettle/crypto/merkle.hpp>

namespace hybridsettle::exp {

namespace {

    constexpr std::size_t kAttributes = 8;

    struct Party {
        ledger::AccountId account;
        std::string did;
        crypto::KeyPair keys;
    };

    struct Holder {
        Party party;
        std::vector<Digest32> leaves;
        Digest32 root;
        std::uint64_t next_nonce{1};
    };

    enum class Category { Unauthenticated, Authorized, Mismatch };

    std::string_view category_name(Category c) {
        switch (c) {
            case Category::Unauthenticated: return "unauthenticated";
            case Category::Authorized: return "authorized";
            case Category::Mismatch: return "mismatch";
        }
        return "";
    }

}  // namespace

ExpResult run_exp5(const ExpConfig& config) {
    ExpResult result;
    result.id = 5;
    result.title = "identity gating and selective disclosure";
    result.headline_metric = "unauthorized request rejection";
    result.reported = "100%";

    const auto& sigs = crypto::default_signature_scheme();
    auto rng = workload::make_rng(config.seed(), "exp5");
    const ledger::AccountId gov = "governance";
    ledger::Ledger ledger{config.schedule, gov};
    contracts::deploy_all(ledger, config.auth_window);

    auto make_party = [&](const std::string& account) {
        Bytes seed;
        append_u64_be(seed, workload::derive_seed(config.seed(), "exp5-key"));
        append(seed, as_bytes(account));
        return Party{account, "did:hs:" + account, sigs.keypair_from_seed(seed)};
    };
    std::vector<Holder> holders;
    for (int i = 0; i < 2; ++i) holders.push_back({make_party(fmt::format("holder-{}", i)), {}, {}, 1});
    std::vector<Party> requesters;
    for (int i = 0; i < 3; ++i) requesters.push_back(make_party(fmt::format("requester-{}", i)));
    const Party idle = make_party("requester-idle");
    const Party stale = make_party("requester-stale");
    const Party impostor = make_party("impostor");
    const Party forger = make_party("forger");

    std::vector<const Party*> everyone{&idle, &stale, &impostor, &forger};
    for (const auto& h : holders) everyone.push_back(&h.party);
    for (const auto& r : requesters) everyone.push_back(&r);

    std::uint64_t setup_failures = 0;
    auto setup = [&](const ledger::AccountId& who, const ledger::Call& call) {
        if (!ledger.execute_tx(who, call).ok()) ++setup_failures;
    };
    auto authenticate = [&](const Party& p) {
        const std::uint64_t bucket = ledger.clock() / contracts::kAuthBucketSeconds;
        const Bytes sig = sigs.sign(p.keys.secret_key, contracts::did_auth_message(p.did, bucket));
        setup(p.account, contracts::did::authenticate(p.did, sig));
    };

    for (const Party* p : everyone) setup(gov, ledger::grant_role(p->account, ledger::Role::Prosumer));
    for (const Party* p : everyone) setup(p->account, contracts::did::register_did(p->did, p->keys.public_key));

    ledger.advance_to(contracts::kAuthBucketSeconds);
    authenticate(stale);
    // Move past the stale requester's window before everyone else authenticates.
    ledger.advance_to(contracts::kAuthBucketSeconds * 2 + config.auth_window + contracts::kAuthBucketSeconds);

    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& h : holders) {
        authenticate(h.party);
        for (std::size_t j = 0; j < kAttributes; ++j) {
            std::array<std::uint8_t, 16> salt{};
            for (auto& b : salt) b = static_cast<std::uint8_t>(byte(rng));
            h.leaves.push_back(contracts::attribute_leaf(fmt::format("attr-{}", j),
                                                         fmt::format("{}-value-{}", h.party.account, j), salt));
        }
        h.root = crypto::merkle_root(h.leaves);
        setup(h.party.account, contracts::sd::commit_root(h.party.did, h.root));
    }
    for (const auto& r : requesters) authenticate(r);
    result.check(setup_failures == 0, fmt::format("{} setup transactions reverted", setup_failures));
    const std::size_t first_request = ledger.receipts().size();

    std::uniform_int_distribution<std::size_t> pick_holder(0, holders.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_req(0, requesters.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_attr(0, kAttributes - 1);

    // Holder-signed authorization for `requester_did`; `signer` overrides the holder key.
    auto authorize = [&](Holder& h, const std::string& requester_did, const Digest32& leaf,
                         const crypto::KeyPair* signer = nullptr) {
        const std::uint64_t nonce = h.next_nonce++;
        const Bytes message = contracts::disclosure_authorization_message(requester_did, leaf, nonce);
        const crypto::KeyPair& k = signer ? *signer : h.party.keys;
        return crypto::SignatureBundle{k.public_key, message, sigs.sign(k.secret_key, message)};
    };

    Series requests{"requests", {"request", "category", "variant", "status", "revert_reason", "result", "gas_used"}, {}};
    std::map<Category, std::uint64_t> counts, successes;
    std::uint64_t unauth_max_gas = 0;
    std::uint64_t gate2_min_gas = ~std::uint64_t{0};
    struct Consumed {
        const Party* requester;
        Holder* holder;
        std::size_t attr;
        crypto::SignatureBundle auth;
    };
    std::vector<Consumed> used;
    std::uint64_t request_no = 0;

    auto submit = [&](Category cat, std::string_view variant, const ledger::AccountId& caller,
                      const std::string& requester_did, Holder& h, std::size_t attr,
                      const crypto::SignatureBundle& auth) {
        const auto proof = crypto::merkle_prove(h.leaves, attr);
        const auto& r = ledger.execute_tx(
            caller, contracts::sd::verify_attribute(requester_did, h.party.did, h.leaves[attr], proof, auth));
        const bool value = r.ok() && contracts::sd::decode_result(r.output);
        bool good = false;
        switch (cat) {
            case Category::Unauthenticated:
                good = !r.ok() && r.revert_reason == "identity gate";
                unauth_max_gas = std::max(unauth_max_gas, r.gas_used);
                break;
            case Category::Authorized:
                good = r.ok() && value;
                break;
            case Category::Mismatch:
                good = r.ok() && !value;
                break;
        }
        if (r.ok()) gate2_min_gas = std::min(gate2_min_gas, r.gas_used);
        counts[cat] += 1;
        if (good) successes[cat] += 1;
        result.check(good, fmt::format("request {} ({} / {}) had the wrong outcome", request_no,
                                       category_name(cat), variant));
        requests.rows.push_back({std::to_string(request_no++), std::string(category_name(cat)), std::string(variant),
                                 std::string(ledger::status_name(r.status)), r.revert_reason.value_or(""),
                                 r.ok() ? (value ? "true" : "false") : "", std::to_string(r.gas_used)});
    };

    for (std::uint64_t i = 0; i < config.exp5_requests; ++i) {
        Holder& h = holders[pick_holder(rng)];
        const Party& req = requesters[pick_req(rng)];
        const std::size_t attr = pick_attr(rng);
        const auto auth = authorize(h, req.did, h.leaves[attr]);
        used.push_back({&req, &h, attr, auth});
        submit(Category::Authorized, "valid", req.account, req.did, h, attr, auth);
    }

    for (std::uint64_t i = 0; i < config.exp5_requests; ++i) {
        Holder& h = holders[pick_holder(rng)];
        const std::size_t attr = pick_attr(rng);
        switch (i % 3) {
            case 0: {
                const auto auth = authorize(h, idle.did, h.leaves[attr]);
                submit(Category::Unauthenticated, "never_authenticated", idle.account, idle.did, h, attr, auth);
                break;
            }
            case 1: {
                const auto auth = authorize(h, stale.did, h.leaves[attr]);
                submit(Category::Unauthenticated, "expired_window", stale.account, stale.did, h, attr, auth);
                break;
            }
            default: {
                const Party& victim = requesters[pick_req(rng)];
                const auto auth = authorize(h, victim.did, h.leaves[attr]);
                submit(Category::Unauthenticated, "foreign_did", impostor.account, victim.did, h, attr, auth);
                break;
            }
        }
    }

    for (std::uint64_t i = 0; i < config.exp5_requests && !used.empty(); ++i) {
        Holder& h = holders[pick_holder(rng)];
        const std::size_t ri = pick_req(rng);
        const Party& req = requesters[ri];
        const std::size_t attr = pick_attr(rng);
        switch (i % 3) {
            case 0: {
                const Party& other = requesters[(ri + 1) % requesters.size()];
                const auto auth = authorize(h, other.did, h.leaves[attr]);
                submit(Category::Mismatch, "other_requester", req.account, req.did, h, attr, auth);
                break;
            }
            case 1: {
                const auto auth = authorize(h, req.did, h.leaves[attr], &forger.keys);
                submit(Category::Mismatch, "wrong_signer", req.account, req.did, h, attr, auth);
                break;
            }
            default: {
                // Replays an already consumed authorization verbatim.
                const auto& prior = used[i % used.size()];
                submit(Category::Mismatch, "replayed_nonce", prior.requester->account, prior.requester->did,
                       *prior.holder, prior.attr, prior.auth);
                break;
            }
        }
    }
    result.series.push_back(std::move(requests));

    const std::uint64_t rejected = successes[Category::Unauthenticated] + successes[Category::Mismatch];
    const std::uint64_t adversarial = counts[Category::Unauthenticated] + counts[Category::Mismatch];
    const double effectiveness = adversarial == 0 ? 100.0 : 100.0 * static_cast<double>(rejected) / adversarial;
    if (counts[Category::Unauthenticated] > 0 && gate2_min_gas != ~std::uint64_t{0}) {
        result.check(unauth_max_gas < gate2_min_gas, fmt::format("gate-1 revert gas {} not below gate-2 floor {}",
                                                                 unauth_max_gas, gate2_min_gas));
    }
    result.metric("authorized_requests", std::to_string(counts[Category::Authorized]));
    result.metric("authorized_true", std::to_string(successes[Category::Authorized]));
    result.metric("unauthenticated_requests", std::to_string(counts[Category::Unauthenticated]));
    result.metric("unauthenticated_reverted_at_gate1", std::to_string(successes[Category::Unauthenticated]));
    result.metric("mismatch_requests", std::to_string(counts[Category::Mismatch]));
    result.metric("mismatch_false", std::to_string(successes[Category::Mismatch]));
    result.metric("gate1_max_gas", std::to_string(unauth_max_gas), "gas");
    result.metric("gate2_min_gas", std::to_string(gate2_min_gas == ~std::uint64_t{0} ? 0 : gate2_min_gas), "gas");
    result.metric("rejection_effectiveness", fmt::format("{:.2f}", effectiveness), "percent");
    result.metric("final_state_digest", ledger.state_digest().hex());

    const std::vector<ledger::TxReceipt> receipts(ledger.receipts().begin() + static_cast<std::ptrdiff_t>(first_request),
                                                  ledger.receipts().end());
    result.artifacts.push_back({"receipts.csv", receipt_log(receipts, config)});
    result.measured = fmt::format("{:.2f}% ({}/{})", effectiveness, rejected, adversarial);
    return result;
}

}  // namespace hybridsettle::exp
