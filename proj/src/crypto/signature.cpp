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

#include <hybridsettle/crypto/signature.hpp>

#include <stdexcept>

#include <sodium.h>

#include <hybridsettle/crypto/keccak.hpp>

namespace hybridsettle::crypto {

Ed25519Scheme::Ed25519Scheme() {
    if (sodium_init() < 0) {
        throw std::runtime_error("libsodium initialisation failed");
    }
}

KeyPair Ed25519Scheme::keypair_from_seed(ByteView seed) const {
    const Digest32 seed32 = keccak256(seed);
    KeyPair kp{Bytes(crypto_sign_PUBLICKEYBYTES), Bytes(crypto_sign_SECRETKEYBYTES)};
    crypto_sign_seed_keypair(kp.public_key.data(), kp.secret_key.data(), seed32.data());
    return kp;
}

Bytes Ed25519Scheme::sign(ByteView secret_key, ByteView message) const {
    if (secret_key.size() != crypto_sign_SECRETKEYBYTES) {
        throw std::invalid_argument("ed25519 secret key must be 64 bytes");
    }
    Bytes signature(crypto_sign_BYTES);
    crypto_sign_detached(signature.data(), nullptr, message.data(), message.size(), secret_key.data());
    return signature;
}

bool Ed25519Scheme::verify(const SignatureBundle& bundle) const noexcept {
    if (bundle.public_key.size() != crypto_sign_PUBLICKEYBYTES || bundle.signature.size() != crypto_sign_BYTES) {
        return false;
    }
    return crypto_sign_verify_detached(bundle.signature.data(), bundle.message.data(), bundle.message.size(),
                                       bundle.public_key.data()) == 0;
}

const SignatureScheme& default_signature_scheme() {
    static const Ed25519Scheme scheme;
    return scheme;
}

bool sig_verify(const SignatureBundle& bundle) { return default_signature_scheme().verify(bundle); }

}  // namespace hybridsettle::crypto
