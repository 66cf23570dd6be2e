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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include <hybridsettle/crypto/accumulator.hpp>
#include <hybridsettle/crypto/keccak.hpp>
#include <hybridsettle/crypto/merkle.hpp>
#include <hybridsettle/crypto/prime.hpp>
#include <hybridsettle/exp/experiments.hpp>
#include <hybridsettle/offchain/records.hpp>

namespace py = pybind11;
using namespace hybridsettle;

namespace {

crypto::BigInt to_big(const py::int_& value) {
    if (py::int_(0) > value) throw py::value_error("negative integers are not supported");
    return crypto::BigInt{value.attr("__str__")().cast<std::string>()};
}

py::int_ to_py(const crypto::BigInt& value) {
    return py::int_(py::module_::import("builtins").attr("int")(value.get_str(16), 16));
}

Bytes to_bytes(const py::bytes& b) {
    const std::string s = b;
    return {s.begin(), s.end()};
}

py::bytes to_py(ByteView b) { return {reinterpret_cast<const char*>(b.data()), b.size()}; }

Digest32 to_digest(const py::bytes& b) {
    const Bytes raw = to_bytes(b);
    if (raw.size() != 32) throw py::value_error("expected 32 bytes");
    return Bytes32::from_span(raw);
}

std::vector<Digest32> to_digests(const std::vector<py::bytes>& items) {
    std::vector<Digest32> out;
    out.reserve(items.size());
    for (const auto& i : items) out.push_back(to_digest(i));
    return out;
}

offchain::SettlementRecord make_record(std::uint64_t timestamp, const py::bytes& participant, const std::string& tx_type,
                                       std::uint64_t energy_kwh, std::uint64_t price_milli, const std::string& region) {
    const Bytes id = to_bytes(participant);
    if (id.size() != 16) throw py::value_error("participant id must be 16 bytes");
    offchain::SettlementRecord r;
    r.timestamp = timestamp;
    std::copy(id.begin(), id.end(), r.participant_id.begin());
    if (tx_type == "buy") {
        r.tx_type = offchain::TxType::Buy;
    } else if (tx_type == "sell") {
        r.tx_type = offchain::TxType::Sell;
    } else {
        throw py::value_error("tx_type must be 'buy' or 'sell'");
    }
    r.energy_kwh = energy_kwh;
    r.price_milli = price_milli;
    r.region = region;
    return r;
}

exp::ExpConfig load_config(const std::optional<std::string>& config_path, std::optional<std::uint64_t> seed) {
    KeyValueConfig kv = config_path ? KeyValueConfig::load(*config_path) : KeyValueConfig{};
    if (seed) kv.set("seed", std::to_string(*seed));
    return exp::ExpConfig::from_config(kv);
}

py::dict result_dict(const exp::ExpResult& r) {
    py::dict metrics;
    for (const auto& m : r.metrics) metrics[py::str(m.name)] = m.value;
    py::dict d;
    d["id"] = r.id;
    d["title"] = r.title;
    d["passed"] = r.passed();
    d["failures"] = r.failures;
    d["headline_metric"] = r.headline_metric;
    d["measured"] = r.measured;
    d["reported"] = r.reported;
    d["metrics"] = metrics;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gas-metered settlement simulator: hashing, commitments, accumulators and experiment drivers";

    m.def("keccak256", [](const py::bytes& data) { return to_py(crypto::keccak256(ByteView{to_bytes(data)}).view()); });
    m.def("sha3_256", [](const py::bytes& data) { return to_py(crypto::sha3_256(ByteView{to_bytes(data)}).view()); });

    m.def("merkle_root", [](const std::vector<py::bytes>& leaves) {
        return to_py(crypto::merkle_root(to_digests(leaves)).view());
    });
    m.def(
        "merkle_prove",
        [](const std::vector<py::bytes>& leaves, std::uint64_t index) {
            const auto proof = crypto::merkle_prove(to_digests(leaves), index);
            std::vector<py::bytes> siblings;
            for (const auto& s : proof.siblings) siblings.push_back(to_py(s.view()));
            return py::make_tuple(proof.leaf_index, siblings, proof.tree_size);
        },
        py::arg("leaves"), py::arg("index"), "Returns (leaf_index, siblings, tree_size).");
    m.def(
        "merkle_verify",
        [](const py::bytes& root, const py::bytes& leaf, std::uint64_t index, const std::vector<py::bytes>& siblings,
           std::uint64_t tree_size) {
            crypto::MerkleProof proof{index, to_digests(siblings), tree_size};
            return crypto::merkle_verify(to_digest(root), to_digest(leaf), proof);
        },
        py::arg("root"), py::arg("leaf"), py::arg("index"), py::arg("siblings"), py::arg("tree_size"));

    m.def("is_probable_prime", [](const py::int_& n) { return crypto::is_probable_prime(to_big(n)); });
    m.def("hash_to_prime", [](const py::bytes& data) { return to_py(crypto::hash_to_prime(to_bytes(data))); });

    m.def(
        "acc_value",
        [](const py::int_& modulus, const py::int_& generator, const std::vector<py::int_>& primes) {
            auto s = crypto::acc_empty({to_big(modulus), to_big(generator)});
            for (const auto& p : primes) s = crypto::acc_add(s, to_big(p));
            return to_py(s.value);
        },
        py::arg("modulus"), py::arg("generator"), py::arg("primes"));
    m.def(
        "acc_witness",
        [](const py::int_& modulus, const py::int_& generator, const std::vector<py::int_>& primes,
           const py::int_& member) {
            auto s = crypto::acc_empty({to_big(modulus), to_big(generator)});
            for (const auto& p : primes) s = crypto::acc_add(s, to_big(p));
            return to_py(crypto::acc_witness(s, to_big(member)).value);
        },
        py::arg("modulus"), py::arg("generator"), py::arg("primes"), py::arg("member"));
    m.def(
        "acc_verify",
        [](const py::int_& value, const py::int_& witness, const py::int_& prime, const py::int_& modulus) {
            return crypto::acc_verify(to_big(value), to_big(witness), to_big(prime), to_big(modulus));
        },
        py::arg("value"), py::arg("witness"), py::arg("prime"), py::arg("modulus"));

    m.def(
        "encode_record",
        [](std::uint64_t timestamp, const py::bytes& participant, const std::string& tx_type, std::uint64_t energy_kwh,
           std::uint64_t price_milli, const std::string& region) {
            return to_py(offchain::encode_record(
                make_record(timestamp, participant, tx_type, energy_kwh, price_milli, region)));
        },
        py::arg("timestamp"), py::arg("participant"), py::arg("tx_type"), py::arg("energy_kwh"),
        py::arg("price_milli"), py::arg("region"));
    m.def(
        "record_digest",
        [](std::uint64_t timestamp, const py::bytes& participant, const std::string& tx_type, std::uint64_t energy_kwh,
           std::uint64_t price_milli, const std::string& region) {
            return to_py(offchain::build_digest(
                             make_record(timestamp, participant, tx_type, energy_kwh, price_milli, region))
                             .view());
        },
        py::arg("timestamp"), py::arg("participant"), py::arg("tx_type"), py::arg("energy_kwh"),
        py::arg("price_milli"), py::arg("region"));

    m.attr("DEFAULT_MODULUS") = to_py(crypto::parse_bigint(exp::kDefaultModulusDecimal));

    m.def(
        "run_exp",
        [](int id, std::optional<std::uint64_t> seed, std::optional<std::string> config, std::optional<std::string> out) {
            const auto cfg = load_config(config, seed);
            exp::ExpResult r;
            {
                py::gil_scoped_release release;
                r = exp::run_exp(id, cfg);
            }
            if (out) exp::write_result(*out, r, cfg);
            return result_dict(r);
        },
        py::arg("id"), py::arg("seed") = py::none(), py::arg("config") = py::none(), py::arg("out") = py::none());
    m.def(
        "run_all",
        [](std::optional<std::uint64_t> seed, std::optional<std::string> config, std::optional<std::string> out) {
            const auto cfg = load_config(config, seed);
            exp::Summary s;
            {
                py::gil_scoped_release release;
                s = exp::run_all(cfg);
            }
            if (out) {
                for (const auto& r : s.results) exp::write_result(*out, r, cfg);
                exp::write_summary(*out, s, cfg);
            }
            py::list rows;
            for (const auto& r : s.results) rows.append(result_dict(r));
            return rows;
        },
        py::arg("seed") = py::none(), py::arg("config") = py::none(), py::arg("out") = py::none());
}
