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

#include "stub_server.h"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <stdexcept>

namespace gecsynth::stub {
namespace {

nlohmann::json completion(const std::string& content, bool refused) {
  nlohmann::json message = {{"role", "assistant"}};
  if (refused) {
    message["content"] = nullptr;
    message["refusal"] = "I can't help with that.";
  } else {
    message["content"] = content;
  }
  return {{"id", "stub"},
          {"object", "chat.completion"},
          {"choices",
           nlohmann::json::array({{{"index", 0},
                                   {"message", message},
                                   {"finish_reason", "stop"}}})}};
}

}  // namespace

StubServer::StubServer(StubBehavior behavior)
    : behavior_(std::move(behavior)),
      server_(std::make_unique<httplib::Server>()),
      rng_(behavior_.seed) {
  server_->Post("/v1/chat/completions",
                [this](const httplib::Request& req, httplib::Response& res) {
                  int status = 200;
                  const std::string body =
                      handle(req.body, req.get_header_value("Authorization"), status);
                  res.status = status;
                  res.set_content(body, "application/json");
                });
  server_->Get("/stats", [this](const httplib::Request&, httplib::Response& res) {
    std::lock_guard lock(mutex_);
    const nlohmann::json stats = {{"requests", requests_},
                                  {"max_in_flight", max_in_flight_}};
    res.set_content(stats.dump(), "application/json");
  });
}

StubServer::~StubServer() { stop(); }

void StubServer::start(int port) {
  port_ = port == 0 ? server_->bind_to_any_port("127.0.0.1")
                    : (server_->bind_to_port("127.0.0.1", port) ? port : -1);
  if (port_ <= 0) throw std::runtime_error("stub server cannot bind");
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

void StubServer::stop() {
  release();
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

void StubServer::release() {
  {
    std::lock_guard lock(mutex_);
    released_ = true;
  }
  released_cv_.notify_all();
}

std::string StubServer::url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

std::size_t StubServer::requests() const {
  std::lock_guard lock(mutex_);
  return requests_;
}

std::size_t StubServer::max_in_flight() const {
  std::lock_guard lock(mutex_);
  return max_in_flight_;
}

std::size_t StubServer::requests_for(const std::string& prompt) const {
  std::lock_guard lock(mutex_);
  auto it = per_prompt_.find(prompt);
  return it == per_prompt_.end() ? 0 : it->second;
}

std::string StubServer::handle(const std::string& body, const std::string& auth,
                               int& status) {
  std::string prompt;
  try {
    prompt = nlohmann::json::parse(body).at("messages").back().at("content");
  } catch (const nlohmann::json::exception&) {
    status = 400;
    return R"({"error":"bad request"})";
  }

  std::size_t seen = 0;
  std::chrono::milliseconds delay{0};
  {
    std::unique_lock lock(mutex_);
    const std::size_t number = ++requests_;
    seen = ++per_prompt_[prompt];
    max_in_flight_ = std::max(max_in_flight_, ++in_flight_);
    if (behavior_.max_delay.count() > 0) {
      delay = std::chrono::milliseconds(std::uniform_int_distribution<long long>(
          0, behavior_.max_delay.count())(rng_));
    }
    if (number > behavior_.hold_after) {
      released_cv_.wait(lock, [this] { return released_; });
    }
  }
  if (delay.count() > 0) std::this_thread::sleep_for(delay);

  nlohmann::json reply;
  if (!behavior_.required_key.empty() && auth != "Bearer " + behavior_.required_key) {
    status = 401;
    reply = {{"error", "unauthorized"}};
  } else if (static_cast<int>(seen) <= behavior_.fail_first) {
    status = 503;
    reply = {{"error", "unavailable"}};
  } else if (!behavior_.refuse_marker.empty() &&
             prompt.find(behavior_.refuse_marker) != std::string::npos) {
    reply = completion("", true);
  } else if (behavior_.fixed_reply) {
    reply = completion(*behavior_.fixed_reply, false);
  } else {
    const auto newline = prompt.rfind('\n');
    reply = completion(newline == std::string::npos ? prompt : prompt.substr(newline + 1),
                       false);
  }
  {
    std::lock_guard lock(mutex_);
    --in_flight_;
  }
  return reply.dump();
}

}  // namespace gecsynth::stub
