// Copyright 2026 The syklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "syklab/key_value.hpp"

#include <charconv>
#include <sstream>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
std::optional<T> parse_number(const std::optional<std::string>& raw,
                              const std::string& key) {
  if (!raw) return std::nullopt;
  T value{};
  const char* first = raw->data();
  const char* last = raw->data() + raw->size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("config key '" + key + "': cannot parse '" + *raw + "'");
  }
  return value;
}

}  // namespace

KeyValueBlock KeyValueBlock::parse(std::string_view text) {
  KeyValueBlock block;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    }
    auto key = trim(std::string_view(line).substr(0, eq));
    auto value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    block.set(key, std::move(value));
  }
  return block;
}

void KeyValueBlock::merge(const KeyValueBlock& other) {
  for (const auto& [k, v] : other.values_) values_[k] = v;
}

std::optional<std::string> KeyValueBlock::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueBlock::get_or(const std::string& key, std::string fallback) const {
  auto v = get(key);
  return v ? *v : std::move(fallback);
}

std::optional<long long> KeyValueBlock::get_int(const std::string& key) const {
  return parse_number<long long>(get(key), key);
}

std::optional<unsigned long long> KeyValueBlock::get_uint(const std::string& key) const {
  return parse_number<unsigned long long>(get(key), key);
}

std::optional<double> KeyValueBlock::get_double(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(*raw, &used);
    if (used != raw->size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + *raw + "'");
  }
}

std::optional<bool> KeyValueBlock::get_bool(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  if (*raw == "true" || *raw == "1" || *raw == "yes" || *raw == "on") return true;
  if (*raw == "false" || *raw == "0" || *raw == "no" || *raw == "off") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + *raw + "'");
}

std::string KeyValueBlock::str() const {
  std::ostringstream out;
  for (const auto& [k, v] : values_) out << k << " = " << v << "\n";
  return out.str();
}

}  // namespace syklab
