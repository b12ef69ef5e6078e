// Copyright 2026 The binpack Authors.
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

#ifndef BINPACK_TESTS_MOCK_ENDPOINT_HPP_INCLUDED
#define BINPACK_TESTS_MOCK_ENDPOINT_HPP_INCLUDED

#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "httplib.h"

namespace testing {

/// Local HTTP server answering POST /solve (and GET /solve/<id>) with a
/// caller-supplied handler.
class MockEndpoint {
 public:
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  explicit MockEndpoint(Handler post, Handler get = {}) {
    server_.Post("/solve", [this, post](const httplib::Request& req, httplib::Response& res) {
      record(req);
      post(req, res);
    });
    server_.Get(R"(/solve/(\w+))", [this, get](const httplib::Request& req, httplib::Response& res) {
      record(req);
      if (get) {
        get(req, res);
      } else {
        res.status = 404;
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockEndpoint() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  std::string last_body() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return body_;
  }
  std::string last_authorization() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return authorization_;
  }
  int requests() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return requests_;
  }

 private:
  void record(const httplib::Request& req) {
    std::lock_guard<std::mutex> lock(mutex_);
    ++requests_;
    if (req.method == "POST") body_ = req.body;
    authorization_ = req.get_header_value("Authorization");
  }

  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  mutable std::mutex mutex_;
  std::string body_;
  std::string authorization_;
  int requests_ = 0;
};

}  // namespace testing

#endif  // BINPACK_TESTS_MOCK_ENDPOINT_HPP_INCLUDED
