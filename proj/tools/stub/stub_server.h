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

#ifndef GECSYNTH_TOOLS_STUB_SERVER_H_
#define GECSYNTH_TOOLS_STUB_SERVER_H_

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>

namespace httplib {
class Server;
}

namespace gecsynth::stub {

struct StubBehavior {
  // Reply text; when unset the last line of the prompt is echoed back.
  std::optional<std::string> fixed_reply;
  // Answer 503 this many times per distinct prompt before succeeding.
  int fail_first = 0;
  // Prompts containing this text get a refusal.
  std::string refuse_marker;
  // Each request sleeps a pseudo-random time in [0, max_delay].
  std::chrono::milliseconds max_delay{0};
  unsigned seed = 1;
  // Requests after the first `hold_after` block until release() is called.
  std::size_t hold_after = std::numeric_limits<std::size_t>::max();
  // When non-empty, requests must carry "Authorization: Bearer <key>".
  std::string required_key;
};

// Chat-completion endpoint at POST /v1/chat/completions that records request
// statistics; GET /stats returns them as JSON.
class StubServer {
 public:
  explicit StubServer(StubBehavior behavior = {});
  ~StubServer();
  StubServer(const StubServer&) = delete;
  StubServer& operator=(const StubServer&) = delete;

  // Binds 127.0.0.1 (port 0 picks a free port) and serves on a background
  // thread.
  void start(int port = 0);
  void stop();
  void release();

  int port() const { return port_; }
  std::string url() const;

  std::size_t requests() const;
  std::size_t max_in_flight() const;
  std::size_t requests_for(const std::string& prompt) const;

 private:
  std::string handle(const std::string& body, const std::string& auth, int& status);

  StubBehavior behavior_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;

  mutable std::mutex mutex_;
  std::condition_variable released_cv_;
  bool released_ = false;
  std::size_t requests_ = 0;
  std::size_t in_flight_ = 0;
  std::size_t max_in_flight_ = 0;
  std::map<std::string, std::size_t> per_prompt_;
  std::mt19937 rng_;
};

}  // namespace gecsynth::stub

#endif  // GECSYNTH_TOOLS_STUB_SERVER_H_
