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

#include <hybridsettle/contracts/accumulator_verifier.hpp>
#include <hybridsettle/contracts/carbon.hpp>
#include <hybridsettle/contracts/identity.hpp>
#include <hybridsettle/contracts/trading.hpp>
#include <hybridsettle/contracts/verifier.hpp>
#include <hybridsettle/ledger/ledger.hpp>

namespace hybridsettle::contracts {

// Installs every contract on `ledger`.
void deploy_all(ledger::Ledger& ledger, std::uint64_t auth_window = kDefaultAuthWindow);

}  // namespace hybridsettle::contracts
