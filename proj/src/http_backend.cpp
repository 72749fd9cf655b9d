#include "rehab/vlm/http_backend.hpp"

#include <chrono>
#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

namespace rehab::vlm {

HttpBackend::HttpBackend(HttpBackendConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.base_url.empty())
    fail(ErrorCategory::Config, "http backend needs a base URL");
}

std::string HttpBackend::name() const {
  return "http:" + cfg_.base_url + " model=" + cfg_.model;
}

std::string HttpBackend::request_body(const BackendRequest& req) const {
  nlohmann::json content = nlohmann::json::array();
  for (const ImageFrame& frame : req.frames) {
    content.push_back(
        {{"type", "image_url"},
         {"image_url",
          {{"url", "data:" + frame.mime + ";base64," +
                       base64_encode(frame.bytes)}}}});
  }
  content.push_back({{"type", "text"}, {"text", req.prompt}});

  nlohmann::json body;
  body["model"] = cfg_.model;
  body["temperature"] = req.decoding.temperature;
  body["n"] = req.decoding.beams;
  body["max_tokens"] = req.decoding.max_output_tokens;
  // Nucleus sampling stays disabled: top_p is omitted entirely.
  body["messages"] = nlohmann::json::array(
      {{{"role", "user"}, {"content", std::move(content)}}});
  return body.dump();
}

BackendResponse HttpBackend::complete(const BackendRequest& req) {
  httplib::Client client(cfg_.base_url);
  client.set_connection_timeout(cfg_.timeout_s, 0);
  client.set_read_timeout(cfg_.timeout_s, 0);
  client.set_write_timeout(cfg_.timeout_s, 0);

  httplib::Headers headers;
  if (!cfg_.auth_env.empty()) {
    if (const char* token = std::getenv(cfg_.auth_env.c_str());
        token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const httplib::Result result = client.Post(
      cfg_.endpoint_path, headers, request_body(req), "application/json");
  const double latency_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();

  if (!result)
    throw TransientError("transport failure: " +
                         httplib::to_string(result.error()));
  if (result->status == 408 || result->status == 429 || result->status >= 500)
    throw TransientError("backend returned HTTP " +
                         std::to_string(result->status));
  if (result->status != 200)
    fail(ErrorCategory::Backend,
         "backend returned HTTP " + std::to_string(result->status) + ": " +
             result->body);

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(result->body);
  } catch (const std::exception& e) {
    fail(ErrorCategory::Protocol,
         std::string("malformed backend reply: ") + e.what());
  }
  try {
    return {j.at("choices").at(0).at("message").at("content").get<std::string>(),
            latency_ms};
  } catch (const std::exception&) {
    fail(ErrorCategory::Protocol,
         "backend reply missing choices[0].message.content");
  }
}

}  // namespace rehab::vlm
