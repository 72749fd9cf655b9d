#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rehab/ingest/crop.hpp"

namespace rehab::ingest {

struct FrameRequest {
  long index = 0;
  std::optional<Rect> crop;
};

struct ExtractorConfig {
  // Shell command with substitutable {input}, {time}, {output} and {crop}
  // fields. {crop} becomes "w:h:x:y" for a crop request and "iw:ih:0:0"
  // for full frames. {time} is the frame timestamp in seconds.
  std::string command_template;
  std::string cache_dir;
};

// Extracts frames through an external child process, caching outputs by
// (video content digest, frame index, crop rect). Cache writes go through
// a temp file and rename, so concurrent readers are safe.
class FrameExtractor {
 public:
  explicit FrameExtractor(ExtractorConfig cfg);

  // Returns cached image paths in request order. A failing tool raises an
  // Io error carrying the captured diagnostics.
  std::vector<std::string> extract(const std::string& video_path,
                                   double native_fps,
                                   const std::vector<FrameRequest>& requests);

  // Child processes spawned so far (cache hits spawn none).
  int spawn_count() const;

 private:
  std::string video_digest(const std::string& video_path);
  std::string cache_path(const std::string& digest, long index,
                         const std::optional<Rect>& crop) const;

  ExtractorConfig cfg_;
  mutable std::mutex mutex_;
  std::map<std::string, std::string> digest_cache_;  // path -> content digest
  int spawns_ = 0;
};

// Runs a shell command, returning its exit status and combined output.
struct CommandResult {
  int status = -1;
  std::string output;
};
CommandResult run_command(const std::string& command);

}  // namespace rehab::ingest
