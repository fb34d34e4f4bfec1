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

#include "gecsynth/annotate.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "gecsynth/corpus.h"
#include "gecsynth/error.h"

namespace gecsynth {
namespace {

using Kind = CompletionReply::Kind;

constexpr std::string_view kDefaultPrompt =
    "Correct only the spelling and grammar mistakes in the following Turkish "
    "sentence. Do not rephrase it. Keep hashtags, mentions, links and the "
    "capitalization of proper nouns exactly as they are. Reply with the "
    "corrected sentence only.\n"
    "{sentence}";

std::size_t count_slots(std::string_view prompt_template) {
  std::size_t count = 0;
  for (auto pos = prompt_template.find(kSentenceSlot);
       pos != std::string_view::npos;
       pos = prompt_template.find(kSentenceSlot, pos + kSentenceSlot.size())) {
    ++count;
  }
  return count;
}

// Appends journal lines; one writer for all workers.
// A line without its newline was cut off mid-write; keeping it would turn a
// truncated correction into a complete-looking record.
void drop_torn_tail(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  const std::string content{std::istreambuf_iterator<char>(in), {}};
  if (content.empty() || content.back() == '\n') return;
  const auto last = content.rfind('\n');
  in.close();
  std::filesystem::resize_file(path, last == std::string::npos ? 0 : last + 1);
}

class Journal {
 public:
  explicit Journal(const std::filesystem::path& path) {
    if (path.empty()) return;
    drop_torn_tail(path);
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) throw ConfigError("cannot open checkpoint " + path.string());
  }

  void append(const AnnotationRecord& record) {
    if (!out_.is_open()) return;
    std::lock_guard lock(mutex_);
    out_ << record.id << '\t' << to_string(record.status) << '\t'
         << record.corrected << '\n'
         << std::flush;
  }

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

void default_sleep(std::chrono::milliseconds duration) {
  std::this_thread::sleep_for(duration);
}

}  // namespace

std::string_view default_prompt_template() { return kDefaultPrompt; }

std::chrono::milliseconds RetryPolicy::backoff(int attempt) const {
  const double scaled = static_cast<double>(initial_backoff.count()) *
                        std::pow(multiplier, std::max(0, attempt - 1));
  const double capped = std::min(scaled, static_cast<double>(max_backoff.count()));
  return std::chrono::milliseconds(static_cast<long long>(capped));
}

std::string_view to_string(AnnotationStatus status) {
  switch (status) {
    case AnnotationStatus::kOk:
      return "ok";
    case AnnotationStatus::kRefused:
      return "refused";
    case AnnotationStatus::kTransportError:
      return "transport_error";
  }
  return "transport_error";
}

std::optional<AnnotationStatus> parse_annotation_status(std::string_view name) {
  if (name == "ok") return AnnotationStatus::kOk;
  if (name == "refused") return AnnotationStatus::kRefused;
  if (name == "transport_error") return AnnotationStatus::kTransportError;
  return std::nullopt;
}

HttpCompletionTransport::HttpCompletionTransport(EndpointConfig endpoint,
                                                 std::string api_key)
    : endpoint_(std::move(endpoint)), api_key_(std::move(api_key)) {}

CompletionReply HttpCompletionTransport::complete(const std::string& prompt) {
  httplib::Client client(endpoint_.base_url);
  if (!client.is_valid()) {
    return {Kind::kPermanent, {}, "invalid endpoint " + endpoint_.base_url};
  }
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(endpoint_.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      endpoint_.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  const nlohmann::json body = {
      {"model", endpoint_.model},
      {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
      {"temperature", 0}};
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  auto response = client.Post(endpoint_.path, headers, body.dump(), "application/json");
  if (!response) {
    return {Kind::kTransient, {}, httplib::to_string(response.error())};
  }
  if (response->status == 429 || response->status >= 500) {
    return {Kind::kTransient, {}, "HTTP " + std::to_string(response->status)};
  }
  if (response->status != 200) {
    return {Kind::kPermanent, {}, "HTTP " + std::to_string(response->status)};
  }

  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(response->body);
    const auto& choice = reply.at("choices").at(0);
    const auto& message = choice.at("message");
    if (message.contains("refusal") && message["refusal"].is_string() &&
        !message["refusal"].get<std::string>().empty()) {
      return {Kind::kRefusal, {}, message["refusal"].get<std::string>()};
    }
    if (choice.value("finish_reason", "") == "content_filter") {
      return {Kind::kRefusal, {}, "content_filter"};
    }
    const auto& content = message.at("content");
    if (!content.is_string()) return {Kind::kRefusal, {}, "no content"};
    return {Kind::kContent, content.get<std::string>(), {}};
  } catch (const nlohmann::json::exception& e) {
    return {Kind::kTransient, {}, std::string("malformed reply: ") + e.what()};
  }
}

std::string render_prompt(std::string_view prompt_template,
                          std::string_view sentence) {
  if (count_slots(prompt_template) != 1) {
    throw ConfigError("prompt template must contain exactly one {sentence} slot");
  }
  std::string out(prompt_template);
  out.replace(out.find(kSentenceSlot), kSentenceSlot.size(), sentence);
  return out;
}

std::vector<AnnotationRecord> read_journal(std::istream& in) {
  std::vector<AnnotationRecord> records;
  std::map<std::string, std::size_t> position;
  std::string line;
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: the writer was interrupted
    const auto first = line.find('\t');
    const auto second = first == std::string::npos ? first : line.find('\t', first + 1);
    if (second == std::string::npos) continue;
    const auto status = parse_annotation_status(
        std::string_view(line).substr(first + 1, second - first - 1));
    if (!status || first == 0) continue;
    AnnotationRecord record;
    record.id = line.substr(0, first);
    record.status = *status;
    record.corrected = line.substr(second + 1);
    if (record.status == AnnotationStatus::kOk && record.corrected.empty()) continue;
    auto [it, inserted] = position.emplace(record.id, records.size());
    if (inserted) {
      records.push_back(std::move(record));
    } else {
      records[it->second] = std::move(record);
    }
  }
  return records;
}

std::vector<AnnotationRecord> annotate_batch(const AnnotationJob& job,
                                             const AnnotateOptions& options) {
  if (count_slots(job.prompt_template) != 1) {
    throw ConfigError("prompt template must contain exactly one {sentence} slot");
  }
  std::unordered_set<std::string> ids;
  for (const SourceSentence& s : job.sentences) {
    if (s.id.empty() || s.id.find_first_of("\t\n") != std::string::npos) {
      throw ConfigError("sentence id '" + s.id + "' is empty or has a tab");
    }
    if (!ids.insert(s.id).second) throw ConfigError("duplicate sentence id " + s.id);
  }
  if (job.endpoint.retry.max_attempts < 1) {
    throw ConfigError("retry policy needs at least one attempt");
  }

  std::shared_ptr<CompletionTransport> transport = options.transport;
  if (!transport) {
    const char* key = job.endpoint.api_key_env.empty()
                          ? nullptr
                          : std::getenv(job.endpoint.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw ConfigError("credential missing: set environment variable " +
                        (job.endpoint.api_key_env.empty() ? std::string("<unset>")
                                                          : job.endpoint.api_key_env));
    }
    transport = std::make_shared<HttpCompletionTransport>(job.endpoint, key);
  }
  const SleepFunction sleep = options.sleep ? options.sleep : default_sleep;

  std::map<std::string, AnnotationRecord> completed;
  if (!job.checkpoint.empty() && std::filesystem::exists(job.checkpoint)) {
    std::ifstream in(job.checkpoint, std::ios::binary);
    if (!in) throw ConfigError("cannot read checkpoint " + job.checkpoint.string());
    for (AnnotationRecord& r : read_journal(in)) {
      if (r.status != AnnotationStatus::kTransportError) {
        completed.emplace(r.id, std::move(r));
      }
    }
  }

  std::vector<AnnotationRecord> records(job.sentences.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < job.sentences.size(); ++i) {
    const SourceSentence& s = job.sentences[i];
    if (auto it = completed.find(s.id); it != completed.end()) {
      records[i] = it->second;
      records[i].attempts = 0;
    } else {
      records[i].id = s.id;
      pending.push_back(i);
    }
    records[i].index = i;
    records[i].source = s.text;
  }

  Journal journal(job.checkpoint);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < pending.size(); k = next++) {
      AnnotationRecord& record = records[pending[k]];
      const std::string prompt = render_prompt(job.prompt_template, record.source);
      const RetryPolicy& retry = job.endpoint.retry;
      for (record.attempts = 1;; ++record.attempts) {
        CompletionReply reply = transport->complete(prompt);
        if (reply.kind == Kind::kContent) {
          record.corrected = normalize(reply.content);
          record.status = record.corrected.empty() ? AnnotationStatus::kRefused
                                                   : AnnotationStatus::kOk;
          break;
        }
        if (reply.kind == Kind::kRefusal) {
          record.status = AnnotationStatus::kRefused;
          break;
        }
        if (reply.kind == Kind::kPermanent || record.attempts >= retry.max_attempts) {
          record.status = AnnotationStatus::kTransportError;
          break;
        }
        sleep(retry.backoff(record.attempts));
      }
      journal.append(record);
    }
  };

  const std::size_t workers =
      std::min(std::max<std::size_t>(job.endpoint.concurrency, 1), pending.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work);
  }
  return records;
}

void export_pairs(std::span<const AnnotationRecord> records, std::ostream& pairs,
                  std::ostream& rejects) {
  std::vector<const AnnotationRecord*> ordered;
  ordered.reserve(records.size());
  for (const AnnotationRecord& r : records) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->index < b->index; });
  for (const AnnotationRecord* r : ordered) {
    if (r->status == AnnotationStatus::kOk) {
      pairs << r->source << '\t' << r->corrected << '\n';
    } else {
      rejects << r->id << '\n';
    }
  }
}

std::vector<SourceSentence> read_sentences(std::istream& in) {
  std::vector<SourceSentence> sentences;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = normalize(line);
    if (!text.empty()) sentences.push_back({std::to_string(line_no), std::move(text)});
  }
  return sentences;
}

}  // namespace gecsynth
