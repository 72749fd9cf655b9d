#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rehab/vlm/backend.hpp"

namespace rehab::vlm {

// One scripting rule. Matches when every present condition holds:
//   prompt_contains      — substring of the prompt text
//   frame_text_contains  — substring of any frame's raw bytes (handy with
//                          the fake extraction tool used in tests)
// `replies` are consumed in call order; the last one sticks.
struct MockRule {
  std::string prompt_contains;
  std::string frame_text_contains;
  std::vector<std::string> replies;
};

// Deterministic scripted backend for offline runs and golden tests.
// Resolution order: exact request-digest entry, first matching rule,
// default reply, else a protocol error. Latency is always reported as 0
// so reruns produce byte-identical transcripts.
class MockBackend : public Backend {
 public:
  MockBackend() = default;

  static MockBackend load_script(const std::string& path);
  static MockBackend from_json_text(std::string_view json_text);

  std::string name() const override { return "mock"; }
  BackendResponse complete(const BackendRequest& req) override;

  void add_digest_reply(std::string digest, std::string reply);
  void add_rule(MockRule rule);
  void set_default_reply(std::string reply);

  std::size_t call_count() const;
  // Frame digests of every request, in call order (test introspection).
  std::vector<std::vector<std::string>> seen_frame_digests() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::string> by_digest_;
  std::vector<MockRule> rules_;
  std::vector<std::size_t> rule_cursor_;
  std::optional<std::string> default_reply_;
  std::size_t calls_ = 0;
  std::vector<std::vector<std::string>> seen_frames_;
};

}  // namespace rehab::vlm
