#include "rehab/core.hpp"

#include <algorithm>
#include <cmath>

#include "rehab/util.hpp"

namespace rehab {

std::string_view to_string(Primitive p) {
  switch (p) {
    case Primitive::Reach: return "reach";
    case Primitive::Reposition: return "reposition";
    case Primitive::Transport: return "transport";
    case Primitive::Stabilize: return "stabilize";
    case Primitive::Idle: return "idle";
  }
  return "?";
}

std::optional<Primitive> parse_primitive_name(std::string_view s) {
  const std::string t = to_lower(trim(s));
  for (Primitive p : kAllPrimitives) {
    if (t == to_string(p)) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Hand h) {
  return h == Hand::Left ? "left" : "right";
}

std::optional<Hand> parse_hand(std::string_view s) {
  const std::string t = to_lower(trim(s));
  if (t == "left" || t == "l") return Hand::Left;
  if (t == "right" || t == "r") return Hand::Right;
  return std::nullopt;
}

Hand other_hand(Hand h) { return h == Hand::Left ? Hand::Right : Hand::Left; }

PrimitiveSequence dedup(const PrimitiveSequence& seq) {
  PrimitiveSequence out;
  out.source_id = seq.source_id;
  out.items.reserve(seq.items.size());
  for (Primitive p : seq.items) {
    if (out.items.empty() || out.items.back() != p) out.items.push_back(p);
  }
  return out;
}

bool is_deduped(const PrimitiveSequence& seq) {
  for (std::size_t i = 1; i < seq.items.size(); ++i) {
    if (seq.items[i] == seq.items[i - 1]) return false;
  }
  return true;
}

std::size_t count(Primitive p, const PrimitiveSequence& seq) {
  return static_cast<std::size_t>(
      std::count(seq.items.begin(), seq.items.end(), p));
}

namespace {
constexpr double kGridEps = 1e-9;
}

double SegmentGrid::segment_duration_s() const {
  return static_cast<double>(frames_per_segment) / sampling_rate_hz;
}

int SegmentGrid::segment_count() const {
  if (video_duration_s <= 0.0) return 0;
  // duration * f / n, floored with a small epsilon so exact multiples do
  // not lose a segment to floating-point noise.
  const double count =
      video_duration_s * sampling_rate_hz / static_cast<double>(frames_per_segment);
  return static_cast<int>(std::floor(count + kGridEps));
}

long SegmentGrid::frame_count() const {
  if (video_duration_s <= 0.0) return 0;
  return static_cast<long>(std::floor(native_fps * video_duration_s + kGridEps));
}

double SegmentGrid::segment_start_s(int segment) const {
  return segment * segment_duration_s();
}

double SegmentGrid::segment_end_s(int segment) const {
  return (segment + 1) * segment_duration_s();
}

std::vector<long> SegmentGrid::sampled_frames(int segment) const {
  const double t0 = segment_start_s(segment);
  const double t1 = segment_end_s(segment);
  const long max_frame = frame_count() - 1;
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(frames_per_segment));
  for (int i = 0; i < frames_per_segment; ++i) {
    const double t =
        frames_per_segment == 1
            ? t0
            : t0 + (t1 - t0) * static_cast<double>(i) /
                       static_cast<double>(frames_per_segment - 1);
    long frame = std::lround(t * native_fps);
    frame = std::clamp<long>(frame, 0, max_frame);
    out.push_back(frame);
  }
  return out;
}

long SegmentGrid::midpoint_frame(int segment) const {
  const double mid = 0.5 * (segment_start_s(segment) + segment_end_s(segment));
  long frame = static_cast<long>(std::floor(mid * native_fps + kGridEps));
  return std::clamp<long>(frame, 0, frame_count() - 1);
}

void SegmentGrid::validate() const {
  if (sampling_rate_hz <= 0.0)
    fail(ErrorCategory::Config, "sampling rate must be positive");
  if (frames_per_segment < 1)
    fail(ErrorCategory::Config, "frames per segment must be >= 1");
  if (native_fps <= 0.0)
    fail(ErrorCategory::Config, "native fps must be positive");
  if (video_duration_s < 0.0)
    fail(ErrorCategory::Config, "video duration must be >= 0");
}

Primitive FrameAnnotation::label_at(long frame) const {
  if (frame < 0 || static_cast<std::size_t>(frame) >= labels.size())
    fail(ErrorCategory::Precondition,
         "annotation does not cover frame " + std::to_string(frame));
  return labels[static_cast<std::size_t>(frame)];
}

double FrameAnnotation::duration_s() const {
  return static_cast<double>(labels.size()) / native_fps;
}

PrimitiveSequence annotation_to_sequence(const FrameAnnotation& ann,
                                         std::string source_id) {
  PrimitiveSequence seq;
  seq.source_id = std::move(source_id);
  seq.items = ann.labels;
  return dedup(seq);
}

SegmentState primitive_state(Primitive p) {
  switch (p) {
    case Primitive::Reach: return {true, false};
    case Primitive::Reposition: return {true, false};
    case Primitive::Transport: return {true, true};
    case Primitive::Stabilize: return {false, true};
    case Primitive::Idle: return {false, false};
  }
  return {};
}

bool is_moving_primitive(Primitive p) {
  return p == Primitive::Reach || p == Primitive::Reposition ||
         p == Primitive::Transport;
}

}  // namespace rehab
