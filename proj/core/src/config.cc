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

#include "gecsynth/config.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>

#include "gecsynth/error.h"

namespace gecsynth {
namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Parses the value part of a line (after '='), dropping a trailing comment.
std::string parse_value(std::string_view raw, std::size_t line_no) {
  raw = trim(raw);
  if (raw.empty()) throw DataError("missing value", line_no);
  if (raw.front() != '"') {
    const auto hash = raw.find('#');
    return std::string(trim(raw.substr(0, hash)));
  }
  std::string out;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const char c = raw[i];
    if (c == '"') {
      const std::string_view rest = trim(raw.substr(i + 1));
      if (!rest.empty() && rest.front() != '#') {
        throw DataError("unexpected text after string", line_no);
      }
      return out;
    }
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (++i == raw.size()) break;
    switch (raw[i]) {
      case 'n':
        out.push_back('\n');
        break;
      case 't':
        out.push_back('\t');
        break;
      case '"':
      case '\\':
        out.push_back(raw[i]);
        break;
      default:
        throw DataError(std::string("unknown escape \\") + raw[i], line_no);
    }
  }
  throw DataError("unterminated string", line_no);
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& value) {
  if (value.empty()) return {};
  std::filesystem::path p(value);
  return p.is_absolute() || base.empty() ? p : base / p;
}

std::size_t positive(const KeyValueConfig& config, std::string_view key,
                     std::size_t fallback) {
  const auto value = config.get_int(key);
  if (!value) return fallback;
  if (*value <= 0) throw ConfigError(std::string(key) + " must be positive");
  return static_cast<std::size_t>(*value);
}

const std::set<std::string, std::less<>> kKnownKeys = {
    "paths.corpus",          "paths.seed_dictionary", "paths.lexicon",
    "paths.suffix_rules",    "paths.abbreviations",   "paths.output_dir",
    "expansion.max_iterations", "expansion.deasciify_cap",
    "expansion.suffix_depth", "score.mode",           "run.workers",
    "annotate.base_url",     "annotate.path",         "annotate.model",
    "annotate.api_key_env",  "annotate.timeout_ms",   "annotate.max_attempts",
    "annotate.backoff_ms",   "annotate.backoff_multiplier",
    "annotate.max_backoff_ms", "annotate.concurrency", "annotate.prompt_file",
    "annotate.checkpoint"};

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
  KeyValueConfig config;
  std::string section;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    if (content.front() == '[') {
      const auto close = content.find(']');
      if (close == std::string_view::npos || close == 1) {
        throw DataError("malformed section header", line_no);
      }
      section = std::string(trim(content.substr(1, close - 1)));
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string_view::npos) throw DataError("expected key = value", line_no);
    const std::string key(trim(content.substr(0, eq)));
    if (key.empty()) throw DataError("empty key", line_no);
    const std::string full = section.empty() ? key : section + "." + key;
    if (!config.values_.emplace(full, parse_value(content.substr(eq + 1), line_no))
             .second) {
      throw DataError("duplicate key " + full, line_no);
    }
  }
  return config;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  try {
    return parse(in);
  } catch (const DataError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<long long> KeyValueConfig::get_int(std::string_view key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
  if (ec != std::errc() || ptr != raw->data() + raw->size()) {
    throw ConfigError(std::string(key) + " must be an integer, got '" + *raw + "'");
  }
  return value;
}

std::optional<double> KeyValueConfig::get_double(std::string_view key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const double value = std::stod(*raw, &used);
    if (used == raw->size()) return value;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string(key) + " must be a number, got '" + *raw + "'");
}

PipelineConfig PipelineConfig::from(const KeyValueConfig& config,
                                    const std::filesystem::path& base_dir) {
  for (const auto& [key, value] : config.values()) {
    if (!kKnownKeys.contains(key)) throw ConfigError("unknown config key " + key);
  }
  PipelineConfig out;
  const auto path = [&](std::string_view key) {
    return resolve(base_dir, config.get(key).value_or(""));
  };
  out.corpus = path("paths.corpus");
  out.seed_dictionary = path("paths.seed_dictionary");
  out.lexicon = path("paths.lexicon");
  out.suffix_rules = path("paths.suffix_rules");
  out.abbreviations = path("paths.abbreviations");
  out.output_dir = path("paths.output_dir");

  out.max_iterations = positive(config, "expansion.max_iterations", out.max_iterations);
  out.deasciify_cap = positive(config, "expansion.deasciify_cap", out.deasciify_cap);
  out.suffix_depth = positive(config, "expansion.suffix_depth", out.suffix_depth);
  if (const auto mode = config.get("score.mode")) {
    const auto parsed = parse_score_mode(*mode);
    if (!parsed) throw ConfigError("unknown score.mode '" + *mode + "'");
    out.score_mode = *parsed;
  }
  if (const auto workers = config.get_int("run.workers")) {
    if (*workers < 0) throw ConfigError("run.workers must not be negative");
    out.workers = static_cast<unsigned>(*workers);
  }

  EndpointConfig& e = out.endpoint;
  e.base_url = config.get("annotate.base_url").value_or(e.base_url);
  e.path = config.get("annotate.path").value_or(e.path);
  e.model = config.get("annotate.model").value_or(e.model);
  e.api_key_env = config.get("annotate.api_key_env").value_or(e.api_key_env);
  e.timeout = std::chrono::milliseconds(
      positive(config, "annotate.timeout_ms", static_cast<std::size_t>(e.timeout.count())));
  e.retry.max_attempts = static_cast<int>(
      positive(config, "annotate.max_attempts", static_cast<std::size_t>(e.retry.max_attempts)));
  e.retry.initial_backoff = std::chrono::milliseconds(positive(
      config, "annotate.backoff_ms", static_cast<std::size_t>(e.retry.initial_backoff.count())));
  e.retry.max_backoff = std::chrono::milliseconds(positive(
      config, "annotate.max_backoff_ms", static_cast<std::size_t>(e.retry.max_backoff.count())));
  e.retry.multiplier =
      config.get_double("annotate.backoff_multiplier").value_or(e.retry.multiplier);
  e.concurrency = positive(config, "annotate.concurrency", e.concurrency);
  out.prompt_file = path("annotate.prompt_file");
  out.checkpoint = path("annotate.checkpoint");
  out.validate();
  return out;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  return from(KeyValueConfig::load(path), path.parent_path());
}

void PipelineConfig::validate() const {
  if (max_iterations == 0) throw ConfigError("max_iterations must be positive");
  if (deasciify_cap == 0) throw ConfigError("deasciify_cap must be positive");
  if (suffix_depth == 0) throw ConfigError("suffix_depth must be positive");
  if (endpoint.retry.max_attempts < 1) throw ConfigError("max_attempts must be positive");
  if (endpoint.retry.multiplier < 1.0) {
    throw ConfigError("backoff_multiplier must be at least 1");
  }
  if (endpoint.concurrency == 0) throw ConfigError("concurrency must be positive");
}

void require_file(const std::filesystem::path& path, std::string_view what) {
  if (path.empty()) throw ConfigError(std::string(what) + " path is not set");
  if (!std::filesystem::exists(path)) {
    throw ConfigError(std::string(what) + " " + path.string() + " does not exist");
  }
}

}  // namespace gecsynth
