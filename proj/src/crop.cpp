#include "rehab/ingest/crop.hpp"

#include <algorithm>
#include <cmath>

#include "rehab/util.hpp"

namespace rehab::ingest {

void CropConfig::validate() const {
  if (crop_size_px <= 0 || crop_size_px > std::min(image_width, image_height))
    fail(ErrorCategory::Config, "crop size must fit inside the image");
  if (min_confidence <= 0.0 || quick_move_px <= 0.0 || still_px <= 0.0 ||
      extension_factor <= 0.0)
    fail(ErrorCategory::Config, "crop thresholds must be positive");
}

Point hand_center(Point elbow, Point wrist, double factor) {
  return {wrist.x + factor * (wrist.x - elbow.x),
          wrist.y + factor * (wrist.y - elbow.y)};
}

namespace {

struct TrajectoryStats {
  double min_confidence = 1.0;
  bool finite = true;
  std::vector<Point> centers;
  double mean_dx = 0.0;
  double mean_dy = 0.0;
};

TrajectoryStats hand_trajectory(const std::vector<KeypointFrame>& frames,
                                Hand hand, const CropConfig& cfg) {
  TrajectoryStats stats;
  for (const KeypointFrame& frame : frames) {
    const Keypoint& e = elbow(frame, hand);
    const Keypoint& w = wrist(frame, hand);
    stats.min_confidence =
        std::min({stats.min_confidence, e.confidence, w.confidence});
    if (!std::isfinite(e.x) || !std::isfinite(e.y) || !std::isfinite(w.x) ||
        !std::isfinite(w.y))
      stats.finite = false;
    stats.centers.push_back(
        hand_center({e.x, e.y}, {w.x, w.y}, cfg.extension_factor));
  }
  if (stats.centers.size() > 1) {
    double sum_dx = 0.0, sum_dy = 0.0;
    for (std::size_t i = 1; i < stats.centers.size(); ++i) {
      sum_dx += std::abs(stats.centers[i].x - stats.centers[i - 1].x);
      sum_dy += std::abs(stats.centers[i].y - stats.centers[i - 1].y);
    }
    const double steps = static_cast<double>(stats.centers.size() - 1);
    stats.mean_dx = sum_dx / steps;
    stats.mean_dy = sum_dy / steps;
  }
  return stats;
}

}  // namespace

CropDecision decide_crop(const std::vector<KeypointFrame>& frames, Hand hand,
                         const CropConfig& cfg) {
  if (frames.empty())
    fail(ErrorCategory::Precondition, "decide_crop needs >= 1 keypoint frame");

  const TrajectoryStats stats = hand_trajectory(frames, hand, cfg);
  CropDecision decision;
  if (stats.min_confidence < cfg.min_confidence || !stats.finite) {
    decision.kind = CropDecision::Kind::Abstain;
    return decision;
  }
  if (stats.mean_dx > cfg.quick_move_px || stats.mean_dy > cfg.quick_move_px) {
    decision.kind = CropDecision::Kind::Moving;
    decision.start_center = stats.centers.front();
    decision.end_center = stats.centers.back();
    return decision;
  }
  decision.kind = CropDecision::Kind::Still;
  double sx = 0.0, sy = 0.0;
  for (const Point& c : stats.centers) {
    sx += c.x;
    sy += c.y;
  }
  decision.center = {sx / static_cast<double>(stats.centers.size()),
                     sy / static_cast<double>(stats.centers.size())};
  return decision;
}

Rect crop_rect(Point center, const CropConfig& cfg) {
  const int size = cfg.crop_size_px;
  int x = static_cast<int>(std::lround(center.x)) - size / 2;
  int y = static_cast<int>(std::lround(center.y)) - size / 2;
  x = std::clamp(x, 0, cfg.image_width - size);
  y = std::clamp(y, 0, cfg.image_height - size);
  return Rect{x, y, size, size};
}

Point interpolate_center(const CropDecision& decision, double t) {
  if (decision.kind == CropDecision::Kind::Moving) {
    return {decision.start_center.x +
                t * (decision.end_center.x - decision.start_center.x),
            decision.start_center.y +
                t * (decision.end_center.y - decision.start_center.y)};
  }
  return decision.center;
}

bool segment_still(const std::vector<KeypointFrame>& frames, Hand hand,
                   const CropConfig& cfg) {
  if (frames.empty()) return false;
  const TrajectoryStats stats = hand_trajectory(frames, hand, cfg);
  if (stats.min_confidence < cfg.min_confidence || !stats.finite) return false;
  return stats.mean_dx <= cfg.still_px && stats.mean_dy <= cfg.still_px;
}

Box subject_bbox_selection(const std::vector<Box>& detections) {
  if (detections.empty())
    fail(ErrorCategory::Precondition, "subject selection needs >= 1 detection");
  const Box* best = &detections.front();
  for (const Box& b : detections) {
    const double area = b.w * b.h;
    const double best_area = best->w * best->h;
    if (area > best_area || (area == best_area && b.x < best->x)) best = &b;
  }
  return *best;
}

}  // namespace rehab::ingest
