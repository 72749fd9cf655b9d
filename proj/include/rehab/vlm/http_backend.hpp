#pragma once

#include <string>

#include "rehab/vlm/backend.hpp"

namespace rehab::vlm {

struct HttpBackendConfig {
  std::string base_url;  // e.g. http://localhost:8000
  std::string endpoint_path = "/v1/chat/completions";
  std::string model = "default";
  // Name of the environment variable holding the bearer token; empty value
  // or unset variable sends no Authorization header.
  std::string auth_env = "VLM_API_KEY";
  int timeout_s = 120;
};

// OpenAI-compatible chat-completions client. Frames are sent as base64
// data-URI image parts of a single user message, with the prompt text as
// the final part. HTTP 408/429/5xx and connection failures raise
// TransientError; malformed bodies raise Protocol errors.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpBackendConfig cfg);

  std::string name() const override;
  BackendResponse complete(const BackendRequest& req) override;

  // Exposed for tests; the JSON body sent for a request.
  std::string request_body(const BackendRequest& req) const;

 private:
  HttpBackendConfig cfg_;
};

}  // namespace rehab::vlm
