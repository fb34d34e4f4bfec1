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

// Local chat-completion endpoint for exercising `gecsynth annotate` without
// network access.

#include <csignal>
#include <iostream>

#include <CLI11.hpp>

#include "stub_server.h"

namespace {
volatile std::sig_atomic_t g_stop = 0;
void on_signal(int) { g_stop = 1; }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stub chat-completion endpoint"};
  int port = 8089;
  std::string fixed_reply;
  std::string refuse_marker;
  std::string required_key;
  int fail_first = 0;
  long long max_delay_ms = 0;
  app.add_option("--port", port, "Port on 127.0.0.1 (0 picks one)");
  app.add_option("--fixed-reply", fixed_reply, "Reply with this text instead of echoing");
  app.add_option("--refuse-marker", refuse_marker, "Refuse prompts containing this text");
  app.add_option("--fail-first", fail_first, "503 responses per prompt before success");
  app.add_option("--max-delay-ms", max_delay_ms, "Random per-request delay bound");
  app.add_option("--require-key", required_key, "Expected bearer token");
  CLI11_PARSE(app, argc, argv);

  gecsynth::stub::StubBehavior behavior;
  if (!fixed_reply.empty()) behavior.fixed_reply = fixed_reply;
  behavior.refuse_marker = refuse_marker;
  behavior.fail_first = fail_first;
  behavior.max_delay = std::chrono::milliseconds(max_delay_ms);
  behavior.required_key = required_key;

  gecsynth::stub::StubServer server(behavior);
  server.start(port);
  std::cout << server.url() << std::endl;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  server.stop();
  std::cerr << "served " << server.requests() << " requests\n";
  return 0;
}
