#pragma once

#include <array>
#include <map>
#include <string>

#include "rehab/core.hpp"

namespace rehab::ingest {

struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  double confidence = 0.0;
};

// 2D skeleton for one frame, 17 keypoints in COCO order.
struct KeypointFrame {
  long frame_index = 0;
  std::array<Keypoint, 17> points{};
};

inline constexpr int kCocoLeftElbow = 7;
inline constexpr int kCocoRightElbow = 8;
inline constexpr int kCocoLeftWrist = 9;
inline constexpr int kCocoRightWrist = 10;

const Keypoint& elbow(const KeypointFrame& frame, Hand hand);
const Keypoint& wrist(const KeypointFrame& frame, Hand hand);

using KeypointMap = std::map<long, KeypointFrame>;

// Sidecar format: one JSON object per line, {"frame": N, "kp": [[x,y,c] x 17]}.
// Confidences must lie in [0, 1].
KeypointMap load_keypoints_jsonl(const std::string& path);
std::string keypoints_to_jsonl(const KeypointMap& map);

}  // namespace rehab::ingest
