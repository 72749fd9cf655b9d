#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rehab {

// The five functional upper-extremity motion classes. Counting their
// occurrences in a video quantifies rehabilitation dose.
enum class Primitive { Reach, Reposition, Transport, Stabilize, Idle };

inline constexpr std::array<Primitive, 5> kAllPrimitives = {
    Primitive::Reach, Primitive::Reposition, Primitive::Transport,
    Primitive::Stabilize, Primitive::Idle};

std::string_view to_string(Primitive p);
// Case-insensitive; round-trips with to_string.
std::optional<Primitive> parse_primitive_name(std::string_view s);

enum class Hand { Left, Right };
std::string_view to_string(Hand h);
std::optional<Hand> parse_hand(std::string_view s);
Hand other_hand(Hand h);

struct PrimitiveSequence {
  std::vector<Primitive> items;
  std::string source_id;

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
};

// Collapses adjacent equal items; order preserved, idempotent.
PrimitiveSequence dedup(const PrimitiveSequence& seq);
bool is_deduped(const PrimitiveSequence& seq);

std::size_t count(Primitive p, const PrimitiveSequence& seq);

// Division of a video timeline into fixed-duration segments, each sampled
// with `frames_per_segment` frames at `sampling_rate_hz`. A trailing
// partial segment shorter than the segment duration is dropped.
struct SegmentGrid {
  double sampling_rate_hz = 15.0;  // f
  int frames_per_segment = 8;      // n
  double video_duration_s = 0.0;
  double native_fps = 60.0;        // recording rate (60 or 100)

  double segment_duration_s() const;
  int segment_count() const;
  long frame_count() const;  // native frames available: floor(fps * duration)
  double segment_start_s(int segment) const;
  double segment_end_s(int segment) const;
  // n sample times evenly spaced over the segment including both endpoints
  // (the single sample sits at the segment start when n == 1), rounded to
  // the nearest native frame and clamped into [0, frame_count).
  std::vector<long> sampled_frames(int segment) const;
  // floor of the segment's midpoint time in native frames; ties round down.
  long midpoint_frame(int segment) const;

  void validate() const;
};

enum class TrackMode { Decomposed, PrimRs };

// One segment's binary state. `active` is "moving significantly" in
// Decomposed mode and "not idle" in PrimRs mode; `grasp` is "grasping an
// object" / "holding".
struct SegmentState {
  bool active = false;
  bool grasp = false;

  bool operator==(const SegmentState&) const = default;
};

struct StateTrack {
  Hand hand = Hand::Left;
  TrackMode mode = TrackMode::Decomposed;
  std::vector<SegmentState> segments;

  std::size_t size() const { return segments.size(); }
};

// Per-frame ground-truth primitive labels for one target hand.
struct FrameAnnotation {
  Hand hand = Hand::Left;
  double native_fps = 60.0;
  std::vector<Primitive> labels;

  std::size_t frame_count() const { return labels.size(); }
  Primitive label_at(long frame) const;
  double duration_s() const;
};

// De-duplicated run labels of the per-frame annotation: the ground-truth
// sequence used by the evaluation metrics.
PrimitiveSequence annotation_to_sequence(const FrameAnnotation& ann,
                                         std::string source_id = {});

// Motion/grasp state implied by a primitive: reach/reposition move with an
// empty hand, transport moves while holding, stabilize holds while still,
// idle is neither.
SegmentState primitive_state(Primitive p);

bool is_moving_primitive(Primitive p);  // reach, reposition or transport

}  // namespace rehab
