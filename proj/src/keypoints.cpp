#include "rehab/ingest/keypoints.hpp"

#include <sstream>

#include <json.hpp>

#include "rehab/util.hpp"

namespace rehab::ingest {

const Keypoint& elbow(const KeypointFrame& frame, Hand hand) {
  return frame.points[hand == Hand::Left ? kCocoLeftElbow : kCocoRightElbow];
}

const Keypoint& wrist(const KeypointFrame& frame, Hand hand) {
  return frame.points[hand == Hand::Left ? kCocoLeftWrist : kCocoRightWrist];
}

KeypointMap load_keypoints_jsonl(const std::string& path) {
  const std::string text = read_file(path);
  KeypointMap map;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      fail(ErrorCategory::Parse, path + ":" + std::to_string(lineno) +
                                     ": bad keypoint record: " + e.what());
    }
    KeypointFrame frame;
    frame.frame_index = j.at("frame").get<long>();
    const auto& kp = j.at("kp");
    if (!kp.is_array() || kp.size() != 17)
      fail(ErrorCategory::Parse, path + ":" + std::to_string(lineno) +
                                     ": keypoint record needs 17 points");
    for (std::size_t i = 0; i < 17; ++i) {
      const auto& point = kp[i];
      Keypoint& out = frame.points[i];
      out.x = point.at(0).get<double>();
      out.y = point.at(1).get<double>();
      out.confidence = point.at(2).get<double>();
      if (out.confidence < 0.0 || out.confidence > 1.0)
        fail(ErrorCategory::Parse, path + ":" + std::to_string(lineno) +
                                       ": confidence outside [0, 1]");
    }
    map[frame.frame_index] = frame;
  }
  return map;
}

std::string keypoints_to_jsonl(const KeypointMap& map) {
  std::string out;
  for (const auto& [frame_index, frame] : map) {
    nlohmann::json kp = nlohmann::json::array();
    for (const Keypoint& p : frame.points)
      kp.push_back({p.x, p.y, p.confidence});
    nlohmann::json j;
    j["frame"] = frame_index;
    j["kp"] = std::move(kp);
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace rehab::ingest
