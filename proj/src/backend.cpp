#include "rehab/vlm/backend.hpp"

#include <chrono>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace rehab::vlm {

ImageFrame ImageFrame::from_file(const std::string& path) {
  ImageFrame f;
  f.bytes = read_file(path);
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    const std::string ext = to_lower(path.substr(dot + 1));
    if (ext == "jpg" || ext == "jpeg") f.mime = "image/jpeg";
    else if (ext == "bmp") f.mime = "image/bmp";
    else f.mime = "image/png";
  }
  return f;
}

std::string BackendRequest::digest() const {
  std::uint64_t h = fnv1a64(prompt);
  for (const ImageFrame& f : frames) {
    h = fnv1a64("\x1f", h);
    h = fnv1a64(f.bytes, h);
  }
  return hex64(h);
}

void Transcript::open_sink(const std::string& path) {
  std::scoped_lock lock(mutex_);
  sink_path_ = path;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCategory::Io, "cannot open transcript sink: " + path);
}

std::string Transcript::to_jsonl_line(const TranscriptRecord& rec) {
  nlohmann::json j;
  j["digest"] = rec.request_digest;
  j["prompt"] = rec.prompt;
  j["response"] = rec.response;
  j["latency_ms"] = rec.latency_ms;
  j["ok"] = rec.ok;
  return j.dump();
}

void Transcript::append(TranscriptRecord rec) {
  std::scoped_lock lock(mutex_);
  if (!sink_path_.empty()) {
    std::ofstream out(sink_path_, std::ios::binary | std::ios::app);
    if (!out) fail(ErrorCategory::Io, "cannot append transcript: " + sink_path_);
    out << to_jsonl_line(rec) << "\n";
  }
  records_.push_back(std::move(rec));
}

std::vector<TranscriptRecord> Transcript::records() const {
  std::scoped_lock lock(mutex_);
  return records_;
}

std::size_t Transcript::size() const {
  std::scoped_lock lock(mutex_);
  return records_.size();
}

std::string VlmClient::query(const BackendRequest& req) {
  if (req.frames.empty())
    fail(ErrorCategory::Precondition, "query requires at least one frame");
  if (trim(req.prompt).empty())
    fail(ErrorCategory::Precondition, "query requires a non-empty prompt");

  const std::string digest = req.digest();
  int backoff_ms = policy_.initial_backoff_ms;
  for (int attempt = 1;; ++attempt) {
    try {
      const BackendResponse resp = backend_.complete(req);
      if (transcript_)
        transcript_->append(
            {digest, req.prompt, resp.text, resp.latency_ms, true});
      return resp.text;
    } catch (const TransientError& e) {
      if (transcript_)
        transcript_->append(
            {digest, req.prompt, std::string("<error: ") + e.what() + ">", 0.0,
             false});
      if (attempt >= policy_.max_attempts)
        throw TransientError(std::string("retries exhausted: ") + e.what());
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms = static_cast<int>(backoff_ms * policy_.backoff_multiplier);
    }
  }
}

}  // namespace rehab::vlm
