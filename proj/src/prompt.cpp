#include "rehab/vlm/prompt.hpp"

#include <json.hpp>

#include "rehab/util.hpp"

namespace rehab::vlm {

namespace {

PromptTemplate parse_template(const nlohmann::json& j) {
  PromptTemplate t;
  if (!j.contains("id") || !j.contains("text"))
    fail(ErrorCategory::Config, "prompt template needs 'id' and 'text'");
  t.id = j.at("id").get<std::string>();
  t.text = j.at("text").get<std::string>();
  if (j.contains("placeholders")) {
    for (const auto& [name, variants] : j.at("placeholders").items()) {
      for (const auto& [key, value] : variants.items()) {
        t.placeholders[name][key] = value.get<std::string>();
      }
    }
  }
  return t;
}

}  // namespace

PromptCatalog PromptCatalog::load_file(const std::string& path) {
  return from_json_text(read_file(path), path);
}

PromptCatalog PromptCatalog::from_json_text(std::string_view json_text,
                                            std::string_view source) {
  PromptCatalog catalog;
  catalog.version_digest_ = digest_hex(json_text);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCategory::Config,
         std::string("bad prompt catalog ") + std::string(source) + ": " + e.what());
  }
  if (!j.contains("templates") || !j.at("templates").is_array())
    fail(ErrorCategory::Config,
         std::string(source) + ": prompt catalog needs a 'templates' array");
  for (const auto& entry : j.at("templates")) {
    PromptTemplate t = parse_template(entry);
    if (catalog.templates_.count(t.id))
      fail(ErrorCategory::Config, "duplicate prompt template id: " + t.id);
    catalog.templates_.emplace(t.id, std::move(t));
  }
  return catalog;
}

bool PromptCatalog::has(std::string_view id) const {
  return templates_.find(id) != templates_.end();
}

const PromptTemplate& PromptCatalog::get(std::string_view id) const {
  auto it = templates_.find(id);
  if (it == templates_.end())
    fail(ErrorCategory::Config, "unknown prompt template: " + std::string(id));
  return it->second;
}

PromptSpec PromptCatalog::render(
    std::string_view id,
    const std::map<std::string, std::string>& selections) const {
  const PromptTemplate& t = get(id);
  std::string text = t.text;
  for (const auto& [name, variants] : t.placeholders) {
    auto sel = selections.find(name);
    if (sel == selections.end())
      fail(ErrorCategory::Config,
           "prompt " + t.id + ": no selection for placeholder {" + name + "}");
    auto variant = variants.find(sel->second);
    if (variant == variants.end())
      fail(ErrorCategory::Config, "prompt " + t.id + ": placeholder {" + name +
                                      "} has no variant '" + sel->second + "'");
    const std::string token = "{" + name + "}";
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
      text.replace(pos, token.size(), variant->second);
      pos += variant->second.size();
    }
  }
  // No unresolved placeholders may remain.
  const std::size_t open = text.find('{');
  if (open != std::string::npos && text.find('}', open) != std::string::npos)
    fail(ErrorCategory::Config,
         "prompt " + t.id + ": unresolved placeholder in rendered text");
  return PromptSpec{t.id, std::move(text)};
}

void PromptCatalog::merge(const PromptCatalog& other) {
  for (const auto& [id, t] : other.templates_) {
    if (templates_.count(id))
      fail(ErrorCategory::Config, "duplicate prompt template id on merge: " + id);
    templates_.emplace(id, t);
  }
  version_digest_ = digest_hex(version_digest_ + other.version_digest_);
}

}  // namespace rehab::vlm
