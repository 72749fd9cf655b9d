#pragma once

#include <vector>

#include "rehab/ingest/keypoints.hpp"

namespace rehab::ingest {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct CropConfig {
  double extension_factor = 0.7;  // elbow-to-wrist vector extension
  double min_confidence = 0.9;    // abstain below this
  double quick_move_px = 15.0;    // mean per-frame displacement, either axis
  double still_px = 3.0;          // stillness threshold, both axes
  int crop_size_px = 224;
  int image_width = 1088;
  int image_height = 704;

  void validate() const;
};

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const Rect&) const = default;
};

struct CropDecision {
  enum class Kind { Abstain, Still, Moving };
  Kind kind = Kind::Abstain;
  Point center{};        // Still
  Point start_center{};  // Moving
  Point end_center{};    // Moving
};

// Estimated hand position: wrist + factor * (wrist - elbow).
Point hand_center(Point elbow, Point wrist, double factor);

// Abstains when the lowest elbow/wrist confidence over the segment's
// frames is below min_confidence; otherwise a moving crop when the mean
// per-frame |dx| or |dy| of the hand center exceeds quick_move_px, else a
// still crop at the mean center.
CropDecision decide_crop(const std::vector<KeypointFrame>& frames, Hand hand,
                         const CropConfig& cfg);

// Square crop of crop_size_px centered at `center`, translated minimally
// to lie inside the image.
Rect crop_rect(Point center, const CropConfig& cfg);

// Moving crops interpolate linearly across the segment; t in [0, 1].
Point interpolate_center(const CropDecision& decision, double t);

// Pose-confident stillness: confidences all >= min_confidence and both
// mean displacements <= still_px.
bool segment_still(const std::vector<KeypointFrame>& frames, Hand hand,
                   const CropConfig& cfg);

struct Box {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
};

// Largest-area detection, ties broken by leftmost x.
Box subject_bbox_selection(const std::vector<Box>& detections);

}  // namespace rehab::ingest
