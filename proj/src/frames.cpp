#include "rehab/ingest/frames.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "rehab/util.hpp"

namespace fs = std::filesystem;

namespace rehab::ingest {

namespace {

std::string replace_all(std::string text, std::string_view token,
                        std::string_view value) {
  std::size_t pos = 0;
  while ((pos = text.find(token, pos)) != std::string::npos) {
    text.replace(pos, token.size(), value);
    pos += value.size();
  }
  return text;
}

std::string format_time(long index, double native_fps) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f",
                static_cast<double>(index) / native_fps);
  return buf;
}

std::string crop_arg(const std::optional<Rect>& crop) {
  if (!crop) return "iw:ih:0:0";
  std::ostringstream ss;
  ss << crop->w << ":" << crop->h << ":" << crop->x << ":" << crop->y;
  return ss.str();
}

}  // namespace

CommandResult run_command(const std::string& command) {
  CommandResult result;
  const std::string shell_cmd = command + " 2>&1";
  FILE* pipe = ::popen(shell_cmd.c_str(), "r");
  if (!pipe) fail(ErrorCategory::Io, "popen failed for: " + command);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), n);
  const int rc = ::pclose(pipe);
  result.status = rc == -1 ? -1 : WEXITSTATUS(rc);
  return result;
}

FrameExtractor::FrameExtractor(ExtractorConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.command_template.empty())
    fail(ErrorCategory::Config, "frame extractor needs a command template");
  if (cfg_.cache_dir.empty())
    fail(ErrorCategory::Config, "frame extractor needs a cache directory");
  ensure_dir(cfg_.cache_dir);
}

std::string FrameExtractor::video_digest(const std::string& video_path) {
  {
    std::scoped_lock lock(mutex_);
    if (auto it = digest_cache_.find(video_path); it != digest_cache_.end())
      return it->second;
  }
  const std::string digest = digest_hex(read_file(video_path));
  std::scoped_lock lock(mutex_);
  digest_cache_[video_path] = digest;
  return digest;
}

std::string FrameExtractor::cache_path(const std::string& digest, long index,
                                       const std::optional<Rect>& crop) const {
  std::ostringstream name;
  name << digest << "_" << index << "_";
  if (crop)
    name << crop->w << "x" << crop->h << "+" << crop->x << "+" << crop->y;
  else
    name << "full";
  name << ".png";
  return (fs::path(cfg_.cache_dir) / name.str()).string();
}

std::vector<std::string> FrameExtractor::extract(
    const std::string& video_path, double native_fps,
    const std::vector<FrameRequest>& requests) {
  if (!file_exists(video_path))
    fail(ErrorCategory::Io, "video not found: " + video_path);
  const std::string digest = video_digest(video_path);

  std::vector<std::string> paths;
  paths.reserve(requests.size());
  for (const FrameRequest& req : requests) {
    if (req.index < 0)
      fail(ErrorCategory::Precondition,
           "negative frame index for " + video_path);
    const std::string path = cache_path(digest, req.index, req.crop);
    if (file_exists(path)) {
      paths.push_back(path);
      continue;
    }
    const std::string tmp = path + ".part";
    std::string cmd = cfg_.command_template;
    cmd = replace_all(cmd, "{input}", video_path);
    cmd = replace_all(cmd, "{time}", format_time(req.index, native_fps));
    cmd = replace_all(cmd, "{output}", tmp);
    cmd = replace_all(cmd, "{crop}", crop_arg(req.crop));

    {
      std::scoped_lock lock(mutex_);
      ++spawns_;
    }
    const CommandResult result = run_command(cmd);
    if (result.status != 0 || !file_exists(tmp)) {
      std::error_code ec;
      fs::remove(tmp, ec);
      fail(ErrorCategory::Io,
           "frame extraction failed (status " + std::to_string(result.status) +
               ") for " + video_path + " frame " + std::to_string(req.index) +
               ": " + result.output);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    // A concurrent extraction may have landed first; that result is
    // identical, so losing the rename race is fine.
    if (ec && !file_exists(path))
      fail(ErrorCategory::Io, "cannot publish extracted frame: " + path);
    paths.push_back(path);
  }
  return paths;
}

int FrameExtractor::spawn_count() const {
  std::scoped_lock lock(mutex_);
  return spawns_;
}

}  // namespace rehab::ingest
