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

#include <chrono>
#include <cstdlib>
#include <thread>

#include "binpack/errors.hpp"
#include "binpack/io.hpp"
#include "binpack/model_builder.hpp"
#include "binpack/presolve.hpp"
#include "binpack/solver.hpp"
#include "httplib.h"

namespace binpack {

namespace {

using Kind = RemoteError::Kind;
using Clock = std::chrono::steady_clock;

RemoteError transport_error(httplib::Error error) {
  const std::string what = "remote transport failure: " + httplib::to_string(error);
  switch (error) {
    case httplib::Error::Read:
    case httplib::Error::Write:
    case httplib::Error::ConnectionTimeout:
      return RemoteError(Kind::Timeout, what);
    default:
      return RemoteError(Kind::Transport, what);
  }
}

nlohmann::json parse_reply(const httplib::Result& res) {
  if (!res) throw transport_error(res.error());
  if (res->status != 200) {
    throw RemoteError(Kind::RemoteFailure, "remote returned HTTP " + std::to_string(res->status));
  }
  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw RemoteError(Kind::MalformedResponse, std::string("response is not JSON: ") + e.what());
  }
  if (!reply.is_object() || !reply.contains("status") || !reply["status"].is_string()) {
    throw RemoteError(Kind::MalformedResponse, "response lacks a status string");
  }
  return reply;
}

}  // namespace

SolverResult solve_remote(const Instance& instance, const SolverBudget& budget,
                          const std::string& endpoint, const RemoteOptions& options) {
  budget.validate();
  const auto start = Clock::now();
  PresolveReport presolve_report;
  BppModel model = build_presolved_model(instance, &presolve_report);

  nlohmann::json request;
  request["model"] = model_to_json(model.model);
  request["time_limit"] = budget.time_limit;

  std::string token = options.token;
  if (token.empty()) {
    if (const char* env = std::getenv("BINPACK_REMOTE_TOKEN")) token = env;
  }

  httplib::Client client(endpoint);
  if (!client.is_valid()) throw RemoteError(Kind::Transport, "invalid endpoint " + endpoint);
  const double deadline = budget.time_limit + options.grace;
  const auto seconds = static_cast<time_t>(deadline);
  const auto micros = static_cast<time_t>((deadline - static_cast<double>(seconds)) * 1e6);
  client.set_connection_timeout(5, 0);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);
  httplib::Headers headers;
  if (!token.empty()) headers.emplace("Authorization", "Bearer " + token);

  nlohmann::json reply =
      parse_reply(client.Post("/solve", headers, request.dump(), "application/json"));

  while (reply["status"] == "pending") {
    if (!reply.contains("job_id") || !reply["job_id"].is_string()) {
      throw RemoteError(Kind::MalformedResponse, "pending response without job_id");
    }
    if (std::chrono::duration<double>(Clock::now() - start).count() > deadline) {
      throw RemoteError(Kind::Timeout, "remote job did not finish in time");
    }
    std::this_thread::sleep_for(std::chrono::duration<double>(options.poll_interval));
    reply = parse_reply(client.Get("/solve/" + reply["job_id"].get<std::string>(), headers));
  }

  const std::string status = reply["status"].get<std::string>();
  if (status == "infeasible") throw RemoteError(Kind::RemoteInfeasible, "remote reports infeasible");
  if (status == "error") {
    const std::string message =
        reply.contains("message") && reply["message"].is_string() ? reply["message"].get<std::string>() : "";
    throw RemoteError(Kind::RemoteFailure, "remote error " + message);
  }
  if (status != "ok") throw RemoteError(Kind::MalformedResponse, "unknown status " + status);
  if (!reply.contains("assignment") || !reply["assignment"].is_object()) {
    throw RemoteError(Kind::MalformedResponse, "response lacks an assignment object");
  }

  std::unordered_map<std::string, double> named;
  for (const auto& [name, value] : reply["assignment"].items()) {
    if (!value.is_number()) {
      throw RemoteError(Kind::MalformedResponse, "assignment value for " + name + " is not numeric");
    }
    if (model.model.find(name) < 0) {
      throw RemoteError(Kind::MalformedResponse, "assignment names unknown variable " + name);
    }
    named.emplace(name, value.get<double>());
  }
  const std::vector<double> values = model.model.assignment(named);
  Solution decoded = decode_assignment(model, values);
  for (size_t i = 0; i < decoded.items.size(); ++i) {
    if (decoded.items[i].bin < 0) {
      throw RemoteError(Kind::MalformedResponse, "item " + std::to_string(i) + " has no bin");
    }
  }

  SolverStats stats;
  stats.backend = "remote";
  stats.iterations = 1;
  stats.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  SolverResult result = finalize_result(instance, {decoded}, stats);
  result.presolve = presolve_report;
  return result;
}

}  // namespace binpack
