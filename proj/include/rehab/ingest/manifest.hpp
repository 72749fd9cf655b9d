#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rehab/core.hpp"

namespace rehab::ingest {

// Cohort impairment levels: control, mild, moderate, severe.
enum class Impairment { Control, Mild, Moderate, Severe };
std::string_view to_string(Impairment level);  // "C", "Mi", "Mo", "S"
std::optional<Impairment> parse_impairment(std::string_view s);

struct ManifestEntry {
  std::string id;  // opaque video identifier
  std::string video;
  std::string subject;
  Impairment impairment = Impairment::Control;
  std::string activity;
  Hand hand = Hand::Left;
  std::string view;
  double native_fps = 60.0;
  std::optional<double> duration_s;  // derived from sidecars when absent
  std::string annotation;  // optional path
  std::string keypoints;   // optional path
};

struct RunManifest {
  std::vector<ManifestEntry> entries;

  // Columns: id,video,subject,impairment,activity,hand,view,native_fps,
  // duration_s,annotation,keypoints (header required). Relative paths are
  // resolved against the manifest's directory. Validates impairment codes,
  // hands, a native fps of 60 or 100, unique ids, and that referenced
  // files exist.
  static RunManifest load_csv(const std::string& path);

  const ManifestEntry& by_id(const std::string& id) const;
};

}  // namespace rehab::ingest
