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

#include <hybridsettle/config.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace hybridsettle {

namespace {

    template <typename T>
    T parse_number(std::string_view key, std::string_view text) {
        const std::string s = trim(text);
        T value{};
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw ConfigError(fmt::format("config key '{}': cannot parse '{}'", key, s));
        }
        return value;
    }

    std::vector<std::string> split_commas(std::string_view text) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = text.find(',', start);
            const std::string item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
            if (!item.empty()) out.push_back(item);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return out;
    }

}  // namespace

std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

std::string format_double(double value) { return fmt::format("{}", value); }

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
    KeyValueConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(fmt::format("config line {}: expected key = value", line_no));
        }
        std::string key = trim(std::string_view(body).substr(0, eq));
        if (key.empty()) {
            throw ConfigError(fmt::format("config line {}: empty key", line_no));
        }
        config.set(std::move(key), trim(std::string_view(body).substr(eq + 1)));
    }
    return config;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void KeyValueConfig::set(std::string key, std::string value) { entries_[std::move(key)] = std::move(value); }

bool KeyValueConfig::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t KeyValueConfig::get_u64(std::string_view key, std::uint64_t fallback) const {
    const auto v = get(key);
    return v ? parse_number<std::uint64_t>(key, *v) : fallback;
}

std::int64_t KeyValueConfig::get_i64(std::string_view key, std::int64_t fallback) const {
    const auto v = get(key);
    return v ? parse_number<std::int64_t>(key, *v) : fallback;
}

double KeyValueConfig::get_double(std::string_view key, double fallback) const {
    const auto v = get(key);
    return v ? parse_number<double>(key, *v) : fallback;
}

std::string KeyValueConfig::get_string(std::string_view key, std::string fallback) const {
    const auto v = get(key);
    return v ? *v : std::move(fallback);
}

std::vector<std::string> KeyValueConfig::get_list(std::string_view key, std::vector<std::string> fallback) const {
    const auto v = get(key);
    return v ? split_commas(*v) : std::move(fallback);
}

std::vector<double> KeyValueConfig::get_doubles(std::string_view key, std::vector<double> fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    std::vector<double> out;
    for (const std::string& item : split_commas(*v)) {
        out.push_back(parse_number<double>(key, item));
    }
    return out;
}

std::string KeyValueConfig::canonical() const {
    std::string out;
    for (const auto& [key, value] : entries_) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

}  // namespace hybridsettle
