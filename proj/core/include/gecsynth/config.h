// Copyright 2026 The gecsynth Authors.
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

#ifndef GECSYNTH_CONFIG_H_
#define GECSYNTH_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gecsynth/annotate.h"
#include "gecsynth/candidates.h"
#include "gecsynth/expansion.h"
#include "gecsynth/gecscore.h"

namespace gecsynth {

// Flat TOML subset: `[section]` headers, `key = value` pairs, '#' comments.
// Values are double-quoted strings (with \" \\ \n \t escapes), integers,
// floats or true/false. Keys are addressed as "section.key".
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in);
  static KeyValueConfig load(const std::filesystem::path& path);

  std::optional<std::string> get(std::string_view key) const;
  std::optional<long long> get_int(std::string_view key) const;
  std::optional<double> get_double(std::string_view key) const;

  const std::map<std::string, std::string, std::less<>>& values() const {
    return values_;
  }

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

struct PipelineConfig {
  // Input and output locations. Relative paths in a config file resolve
  // against the file's directory.
  std::filesystem::path corpus;
  std::filesystem::path seed_dictionary;
  std::filesystem::path lexicon;
  std::filesystem::path suffix_rules;  // empty: built-in rules
  std::filesystem::path abbreviations;  // empty: built-in list
  std::filesystem::path output_dir;

  std::size_t max_iterations = kDefaultMaxIterations;
  std::size_t deasciify_cap = kDefaultDeasciifyCap;
  std::size_t suffix_depth = kDefaultSuffixDepth;
  ScoreMode score_mode = ScoreMode::kSpanCorrection;
  unsigned workers = 0;  // 0: one per hardware thread

  EndpointConfig endpoint;
  std::filesystem::path prompt_file;  // empty: default prompt
  std::filesystem::path checkpoint;

  // Throws ConfigError on unknown keys or bad values.
  static PipelineConfig from(const KeyValueConfig& config,
                             const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& path);

  // Caps must be positive.
  void validate() const;
};

// Throws ConfigError naming `what` when the file does not exist.
void require_file(const std::filesystem::path& path, std::string_view what);

}  // namespace gecsynth

#endif  // GECSYNTH_CONFIG_H_
