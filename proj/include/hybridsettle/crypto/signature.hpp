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

#include <string_view>

#include <hybridsettle/crypto/bytes.hpp>

namespace hybridsettle::crypto {

struct SignatureBundle {
    Bytes public_key;
    Bytes message;
    Bytes signature;
};

struct KeyPair {
    Bytes public_key;
    Bytes secret_key;
};

// Contracts only ever see `verify`; everything else is for off-chain signers.
class SignatureScheme {
  public:
    virtual ~SignatureScheme() = default;

    [[nodiscard]] virtual std::string_view name() const noexcept = 0;
    [[nodiscard]] virtual KeyPair keypair_from_seed(ByteView seed) const = 0;
    [[nodiscard]] virtual Bytes sign(ByteView secret_key, ByteView message) const = 0;
    // Malformed inputs verify as false.
    [[nodiscard]] virtual bool verify(const SignatureBundle& bundle) const noexcept = 0;
};

// Ed25519 through libsodium. Seeds are hashed to 32 bytes, so any length works.
class Ed25519Scheme final : public SignatureScheme {
  public:
    Ed25519Scheme();

    [[nodiscard]] std::string_view name() const noexcept override { return "ed25519"; }
    [[nodiscard]] KeyPair keypair_from_seed(ByteView seed) const override;
    [[nodiscard]] Bytes sign(ByteView secret_key, ByteView message) const override;
    [[nodiscard]] bool verify(const SignatureBundle& bundle) const noexcept override;
};

const SignatureScheme& default_signature_scheme();

bool sig_verify(const SignatureBundle& bundle);

}  // namespace hybridsettle::crypto
