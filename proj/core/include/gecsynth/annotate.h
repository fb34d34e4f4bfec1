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

#ifndef GECSYNTH_ANNOTATE_H_
#define GECSYNTH_ANNOTATE_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gecsynth {

inline constexpr std::string_view kSentenceSlot = "{sentence}";

// Asks for spelling and grammar fixes only; hashtags and proper-noun casing
// must survive.
std::string_view default_prompt_template();

struct RetryPolicy {
  int max_attempts = 5;  // including the first
  std::chrono::milliseconds initial_backoff{200};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{10'000};

  // Wait before attempt `attempt + 1`, given `attempt` failures so far.
  std::chrono::milliseconds backoff(int attempt) const;
};

struct EndpointConfig {
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string model = "gpt-3.5-turbo";
  std::string api_key_env = "OPENAI_API_KEY";
  std::chrono::milliseconds timeout{30'000};
  RetryPolicy retry;
  std::size_t concurrency = 4;
};

struct SourceSentence {
  std::string id;
  std::string text;
};

struct AnnotationJob {
  std::vector<SourceSentence> sentences;
  std::string prompt_template{default_prompt_template()};
  EndpointConfig endpoint;
  std::filesystem::path checkpoint;
};

enum class AnnotationStatus { kOk, kRefused, kTransportError };

std::string_view to_string(AnnotationStatus status);
std::optional<AnnotationStatus> parse_annotation_status(std::string_view name);

struct AnnotationRecord {
  std::size_t index = 0;  // position in the job's input
  std::string id;
  std::string source;
  std::string corrected;
  AnnotationStatus status = AnnotationStatus::kTransportError;
  int attempts = 0;  // requests issued in this run; 0 when replayed

  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

// Outcome of a single request.
struct CompletionReply {
  enum class Kind { kContent, kRefusal, kTransient, kPermanent };
  Kind kind = Kind::kTransient;
  std::string content;
  std::string error;
};

// Sends one prompt to a chat-completion service. Must be safe to call from
// several threads at once.
class CompletionTransport {
 public:
  virtual ~CompletionTransport() = default;
  virtual CompletionReply complete(const std::string& prompt) = 0;
};

// JSON chat-completion over HTTP(S): POST {"model", "messages": [{"role":
// "user", "content": prompt}]} and read choices[0].message.content. 429, 5xx
// and connection failures are transient; other statuses are permanent.
class HttpCompletionTransport final : public CompletionTransport {
 public:
  HttpCompletionTransport(EndpointConfig endpoint, std::string api_key);
  CompletionReply complete(const std::string& prompt) override;

 private:
  EndpointConfig endpoint_;
  std::string api_key_;
};

// Replaces the single {sentence} slot. Throws ConfigError unless the template
// has exactly one slot.
std::string render_prompt(std::string_view prompt_template,
                          std::string_view sentence);

// `id<TAB>status<TAB>corrected` lines. Later lines for an id supersede
// earlier ones; a torn final line is ignored.
std::vector<AnnotationRecord> read_journal(std::istream& in);

using SleepFunction = std::function<void(std::chrono::milliseconds)>;

struct AnnotateOptions {
  // Replaces the HTTP transport (tests, alternative services). When null an
  // HttpCompletionTransport is built from the job and the credential is read
  // from the environment variable named in the endpoint config.
  std::shared_ptr<CompletionTransport> transport;
  SleepFunction sleep;  // defaults to std::this_thread::sleep_for
};

// Annotates every sentence not already completed in the checkpoint journal.
// ok and refused entries count as completed; transport errors are retried on
// the next run. One record per input sentence is returned, in input order.
// Throws ConfigError for a missing credential, duplicate ids or a bad
// template.
std::vector<AnnotationRecord> annotate_batch(const AnnotationJob& job,
                                             const AnnotateOptions& options = {});

// ok records as `source<TAB>corrected` in input order; every other id on its
// own line in `rejects`.
void export_pairs(std::span<const AnnotationRecord> records, std::ostream& pairs,
                  std::ostream& rejects);

// One sentence per non-empty line; ids are 1-based line numbers.
std::vector<SourceSentence> read_sentences(std::istream& in);

}  // namespace gecsynth

#endif  // GECSYNTH_ANNOTATE_H_
