#include "rehab/vlm/mock_backend.hpp"

#include <json.hpp>

namespace rehab::vlm {

MockBackend MockBackend::load_script(const std::string& path) {
  return from_json_text(read_file(path));
}

MockBackend MockBackend::from_json_text(std::string_view json_text) {
  MockBackend mock;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCategory::Config, std::string("bad mock script: ") + e.what());
  }
  if (j.contains("responses")) {
    for (const auto& [digest, reply] : j.at("responses").items())
      mock.add_digest_reply(digest, reply.get<std::string>());
  }
  if (j.contains("rules")) {
    for (const auto& rule_json : j.at("rules")) {
      MockRule rule;
      rule.prompt_contains = rule_json.value("prompt_contains", "");
      rule.frame_text_contains = rule_json.value("frame_text_contains", "");
      if (rule_json.contains("reply"))
        rule.replies.push_back(rule_json.at("reply").get<std::string>());
      if (rule_json.contains("replies"))
        for (const auto& r : rule_json.at("replies"))
          rule.replies.push_back(r.get<std::string>());
      if (rule.replies.empty())
        fail(ErrorCategory::Config, "mock rule without reply/replies");
      mock.add_rule(std::move(rule));
    }
  }
  if (j.contains("default") && !j.at("default").is_null())
    mock.set_default_reply(j.at("default").get<std::string>());
  return mock;
}

void MockBackend::add_digest_reply(std::string digest, std::string reply) {
  std::scoped_lock lock(mutex_);
  by_digest_[std::move(digest)] = std::move(reply);
}

void MockBackend::add_rule(MockRule rule) {
  std::scoped_lock lock(mutex_);
  rules_.push_back(std::move(rule));
  rule_cursor_.push_back(0);
}

void MockBackend::set_default_reply(std::string reply) {
  std::scoped_lock lock(mutex_);
  default_reply_ = std::move(reply);
}

BackendResponse MockBackend::complete(const BackendRequest& req) {
  std::scoped_lock lock(mutex_);
  ++calls_;
  std::vector<std::string> digests;
  digests.reserve(req.frames.size());
  for (const ImageFrame& f : req.frames) digests.push_back(f.digest());
  seen_frames_.push_back(digests);

  if (auto it = by_digest_.find(req.digest()); it != by_digest_.end())
    return {it->second, 0.0};

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const MockRule& rule = rules_[i];
    if (!rule.prompt_contains.empty() &&
        req.prompt.find(rule.prompt_contains) == std::string::npos)
      continue;
    if (!rule.frame_text_contains.empty()) {
      bool any = false;
      for (const ImageFrame& f : req.frames) {
        if (f.bytes.find(rule.frame_text_contains) != std::string::npos) {
          any = true;
          break;
        }
      }
      if (!any) continue;
    }
    const std::size_t cursor = rule_cursor_[i];
    const std::string& reply =
        rule.replies[std::min(cursor, rule.replies.size() - 1)];
    if (cursor + 1 < rule.replies.size()) rule_cursor_[i] = cursor + 1;
    else rule_cursor_[i] = rule.replies.size();  // last reply sticks
    return {reply, 0.0};
  }

  if (default_reply_) return {*default_reply_, 0.0};
  fail(ErrorCategory::Protocol,
       "mock backend has no scripted reply for request " + req.digest());
}

std::size_t MockBackend::call_count() const {
  std::scoped_lock lock(mutex_);
  return calls_;
}

std::vector<std::vector<std::string>> MockBackend::seen_frame_digests() const {
  std::scoped_lock lock(mutex_);
  return seen_frames_;
}

}  // namespace rehab::vlm
