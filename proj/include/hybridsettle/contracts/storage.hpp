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
#include <string_view>

#include <hybridsettle/ledger/ledger.hpp>

namespace hybridsettle::contracts {

// Variable-length values span a length slot (index 0) and ceil(len/32) data slots.
void store_bytes(ledger::ExecContext& ctx, std::string_view tag, ByteView key, ByteView value);
Bytes load_bytes(ledger::ExecContext& ctx, std::string_view tag, ByteView key, std::string_view contract = {});

// Packs big-endian u64 fields left to right into one word.
Bytes32 pack_u64s(std::initializer_list<std::uint64_t> fields);
std::uint64_t unpack_u64(const Bytes32& word, std::size_t field);

Bytes concat(std::initializer_list<ByteView> parts);

// Read-only context over committed state for inspection helpers; gas is discarded.
ledger::ExecContext inspect(const ledger::ChainState& state, std::string_view contract);

}  // namespace hybridsettle::contracts
