#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rehab/util.hpp"

namespace rehab::vlm {

struct ImageFrame {
  std::string bytes;
  std::string mime = "image/png";

  std::string digest() const { return digest_hex(bytes); }

  static ImageFrame from_file(const std::string& path);
};

// Greedy decoding: temperature 0, nucleus sampling disabled, single beam.
struct DecodingParams {
  double temperature = 0.0;
  bool nucleus_enabled = false;
  int beams = 1;
  int max_output_tokens = 512;
};

struct BackendRequest {
  std::vector<ImageFrame> frames;
  std::string prompt;
  DecodingParams decoding;

  // Digest over (prompt, ordered frame digests); keys transcripts and the
  // scripted mock backend.
  std::string digest() const;
};

struct BackendResponse {
  std::string text;
  double latency_ms = 0.0;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string name() const = 0;
  // Throws TransientError for retryable transport failures and Error
  // (Protocol/Backend) otherwise.
  virtual BackendResponse complete(const BackendRequest& req) = 0;
};

struct TranscriptRecord {
  std::string request_digest;
  std::string prompt;
  std::string response;
  double latency_ms = 0.0;
  bool ok = true;
};

// Append-only query log; optionally mirrored to a JSONL file as records
// arrive. Thread-safe.
class Transcript {
 public:
  Transcript() = default;
  void open_sink(const std::string& path);
  void append(TranscriptRecord rec);
  std::vector<TranscriptRecord> records() const;
  std::size_t size() const;
  static std::string to_jsonl_line(const TranscriptRecord& rec);

 private:
  mutable std::mutex mutex_;
  std::vector<TranscriptRecord> records_;
  std::string sink_path_;
};

struct RetryPolicy {
  int max_attempts = 3;
  int initial_backoff_ms = 50;
  double backoff_multiplier = 2.0;
};

// Issues requests against a backend with retry/backoff on transient
// failures, recording every attempt to the transcript.
class VlmClient {
 public:
  VlmClient(Backend& backend, Transcript* transcript, RetryPolicy policy = {})
      : backend_(backend), transcript_(transcript), policy_(policy) {}

  // Requires >= 1 frame and a non-empty prompt. Returns the backend text
  // verbatim.
  std::string query(const BackendRequest& req);

  Backend& backend() { return backend_; }
  Transcript* transcript() { return transcript_; }

 private:
  Backend& backend_;
  Transcript* transcript_;
  RetryPolicy policy_;
};

}  // namespace rehab::vlm
