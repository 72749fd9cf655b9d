#include "rehab/vlm/parsers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rehab/util.hpp"

namespace rehab::vlm {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

std::optional<bool> parse_yes_no(std::string_view text) {
  for (const std::string& tok : tokenize(text)) {
    if (tok == "yes") return true;
    if (tok == "no") return false;
  }
  return std::nullopt;
}

namespace {

// Stem used for the last-resort scan: first word of the label, truncated
// to four characters ("combing" -> "comb" matches "combs").
std::string label_stem(const std::string& normalized_label) {
  const auto space = normalized_label.find(' ');
  std::string word = space == std::string::npos ? normalized_label
                                                : normalized_label.substr(0, space);
  if (word.size() > 4) word.resize(4);
  return word;
}

std::optional<std::size_t> match_answer_to_class(
    const std::string& normalized_answer,
    const std::vector<std::string>& normalized_classes) {
  // Exact normalized match first.
  for (std::size_t i = 0; i < normalized_classes.size(); ++i) {
    if (normalized_answer == normalized_classes[i]) return i;
  }
  // Containment either way; prefer the longest label.
  std::optional<std::size_t> best;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < normalized_classes.size(); ++i) {
    const std::string& label = normalized_classes[i];
    if (label.empty()) continue;
    const bool hit = normalized_answer.find(label) != std::string::npos ||
                     label.find(normalized_answer) != std::string::npos;
    if (hit && label.size() > best_len && !normalized_answer.empty()) {
      best = i;
      best_len = label.size();
    }
  }
  return best;
}

std::optional<std::size_t> stem_scan(
    const std::string& normalized_text,
    const std::vector<std::string>& normalized_classes) {
  std::optional<std::size_t> best;
  std::size_t best_pos = std::string::npos;
  const std::vector<std::string> tokens = tokenize(normalized_text);
  for (std::size_t i = 0; i < normalized_classes.size(); ++i) {
    const std::string stem = label_stem(normalized_classes[i]);
    if (stem.empty()) continue;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (tokens[t].rfind(stem, 0) == 0) {
        if (t < best_pos) {
          best_pos = t;
          best = i;
        }
        break;
      }
    }
  }
  return best;
}

}  // namespace

std::optional<std::string> parse_final_answer(
    std::string_view text, const std::vector<std::string>& classes) {
  if (classes.empty())
    fail(ErrorCategory::Precondition, "parse_final_answer: empty class list");

  std::vector<std::string> normalized;
  normalized.reserve(classes.size());
  for (const std::string& c : classes) normalized.push_back(normalize_text(c));

  // Last line carrying the FINAL_ANSWER marker wins.
  std::optional<std::string> marker_content;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const std::string lowered = to_lower(line);
    const auto pos = lowered.find("final_answer");
    if (pos == std::string::npos) continue;
    auto colon = line.find(':', pos);
    if (colon == std::string::npos) continue;
    marker_content = trim(line.substr(colon + 1));
  }

  if (marker_content) {
    const std::string answer = normalize_text(*marker_content);
    if (auto idx = match_answer_to_class(answer, normalized)) return classes[*idx];
    if (auto idx = stem_scan(answer, normalized)) return classes[*idx];
    return std::nullopt;
  }

  // No marker: scan the whole reply.
  const std::string whole = normalize_text(text);
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (!normalized[i].empty() && whole.find(normalized[i]) != std::string::npos)
      return classes[i];
  }
  if (auto idx = stem_scan(whole, normalized)) return classes[*idx];
  return std::nullopt;
}

std::optional<Primitive> parse_primitive(std::string_view text) {
  const std::string lowered = to_lower(text);
  std::optional<Primitive> best;
  std::size_t best_pos = std::string::npos;
  for (Primitive p : kAllPrimitives) {
    const auto pos = lowered.find(to_string(p));
    if (pos != std::string::npos && pos < best_pos) {
      best_pos = pos;
      best = p;
    }
  }
  return best;
}

std::optional<int> parse_rating(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '2') continue;
    const bool left_ok =
        i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    const bool right_ok = i + 1 >= text.size() ||
                          !std::isalnum(static_cast<unsigned char>(text[i + 1]));
    if (left_ok && right_ok) return c - '0';
  }
  return std::nullopt;
}

std::optional<TouchCounts> parse_touch_counts(std::string_view text) {
  const std::string lowered = to_lower(text);

  auto int_after = [&](std::string_view keyword) -> std::optional<int> {
    const auto pos = lowered.find(keyword);
    if (pos == std::string::npos) return std::nullopt;
    std::size_t i = pos + keyword.size();
    while (i < lowered.size() &&
           !std::isdigit(static_cast<unsigned char>(lowered[i])))
      ++i;
    if (i >= lowered.size()) return std::nullopt;
    int value = 0;
    while (i < lowered.size() && std::isdigit(static_cast<unsigned char>(lowered[i]))) {
      value = value * 10 + (lowered[i] - '0');
      ++i;
    }
    return value;
  };

  const auto nose = int_after("nose");
  const auto knee = int_after("knee");
  if (nose && knee) return TouchCounts{*nose, *knee};

  // Fallback: first two integers, read as (nose, knee).
  std::vector<int> numbers;
  for (std::size_t i = 0; i < lowered.size() && numbers.size() < 2; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(lowered[i]))) continue;
    int value = 0;
    while (i < lowered.size() && std::isdigit(static_cast<unsigned char>(lowered[i]))) {
      value = value * 10 + (lowered[i] - '0');
      ++i;
    }
    numbers.push_back(value);
  }
  if (numbers.size() == 2) return TouchCounts{numbers[0], numbers[1]};
  return std::nullopt;
}

}  // namespace rehab::vlm
