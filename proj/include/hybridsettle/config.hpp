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
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <hybridsettle/crypto/bytes.hpp>

namespace hybridsettle {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Plain-text `key = value` file. `#` starts a comment; blank lines are ignored.
// Later assignments to the same key win.
class KeyValueConfig {
  public:
    KeyValueConfig() = default;

    static KeyValueConfig parse(std::string_view text);
    static KeyValueConfig load(const std::filesystem::path& path);

    void set(std::string key, std::string value);
    [[nodiscard]] bool contains(std::string_view key) const;
    [[nodiscard]] std::optional<std::string> get(std::string_view key) const;

    [[nodiscard]] std::uint64_t get_u64(std::string_view key, std::uint64_t fallback) const;
    [[nodiscard]] std::int64_t get_i64(std::string_view key, std::int64_t fallback) const;
    [[nodiscard]] double get_double(std::string_view key, double fallback) const;
    [[nodiscard]] std::string get_string(std::string_view key, std::string fallback) const;
    // Comma-separated list.
    [[nodiscard]] std::vector<std::string> get_list(std::string_view key, std::vector<std::string> fallback) const;
    [[nodiscard]] std::vector<double> get_doubles(std::string_view key, std::vector<double> fallback) const;

    // Sorted `key=value` lines; the basis of the config digest.
    [[nodiscard]] std::string canonical() const;
    [[nodiscard]] const std::map<std::string, std::string, std::less<>>& entries() const noexcept { return entries_; }

  private:
    std::map<std::string, std::string, std::less<>> entries_;
};

std::string trim(std::string_view text);

// Shortest round-trip decimal form, used wherever doubles are echoed into config or reports.
std::string format_double(double value);

}  // namespace hybridsettle
