#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rehab::vlm {

// A catalog template. `text` may contain {name} placeholders; each
// placeholder offers named variants ("left", "right", "center", "still",
// "moving", "empty", "holding", ...) chosen at render time.
struct PromptTemplate {
  std::string id;
  std::string text;
  std::map<std::string, std::map<std::string, std::string>> placeholders;
};

struct PromptSpec {
  std::string template_id;
  std::string text;
};

class PromptCatalog {
 public:
  static PromptCatalog load_file(const std::string& path);
  static PromptCatalog from_json_text(std::string_view json_text,
                                      std::string_view source = "<inline>");

  bool has(std::string_view id) const;
  const PromptTemplate& get(std::string_view id) const;

  // Renders with one variant selection per placeholder; fails if any
  // placeholder is left unresolved or a selection is unknown.
  PromptSpec render(std::string_view id,
                    const std::map<std::string, std::string>& selections) const;

  // Digest of the raw catalog bytes, recorded in run summaries.
  const std::string& version_digest() const { return version_digest_; }

  void merge(const PromptCatalog& other);

 private:
  std::map<std::string, PromptTemplate, std::less<>> templates_;
  std::string version_digest_;
};

}  // namespace rehab::vlm
