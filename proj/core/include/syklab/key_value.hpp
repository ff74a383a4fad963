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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace syklab {

/// Flat `key = value` configuration block. Lines starting with '#' are
/// comments; later assignments override earlier ones.
class KeyValueBlock {
 public:
  static KeyValueBlock parse(std::string_view text);

  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  bool contains(const std::string& key) const { return values_.count(key) != 0; }
  void merge(const KeyValueBlock& other);

  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, std::string fallback) const;
  /// Typed accessors; throw ConfigError on malformed values.
  std::optional<long long> get_int(const std::string& key) const;
  std::optional<unsigned long long> get_uint(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }
  std::string str() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace syklab
