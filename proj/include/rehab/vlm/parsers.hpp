#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rehab/core.hpp"

namespace rehab::vlm {

// All parsers return nullopt when the reply is unparseable; fallback
// policies live with the callers.

// First "yes"/"no" token in the text (leading token included); true = yes.
std::optional<bool> parse_yes_no(std::string_view text);

// Content of the last "FINAL_ANSWER: ..." line fuzzy-matched against the
// class list (case/punctuation-insensitive, containment, then word-stem
// scan); without the marker line, falls back to scanning the whole text.
std::optional<std::string> parse_final_answer(std::string_view text,
                                              const std::vector<std::string>& classes);

// First occurrence of any of the five primitive names, case-insensitive.
std::optional<Primitive> parse_primitive(std::string_view text);

// First standalone digit in {0, 1, 2}.
std::optional<int> parse_rating(std::string_view text);

// Touch counts for the coordination/speed item; accepts "nose: N ... knee:
// M" in either order, else the first two integers as (nose, knee).
struct TouchCounts {
  int nose = 0;
  int knee = 0;
};
std::optional<TouchCounts> parse_touch_counts(std::string_view text);

}  // namespace rehab::vlm
