#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rehab {

enum class ErrorCategory {
  Config,
  Manifest,
  Io,
  Backend,
  Protocol,
  Parse,
  Precondition,
  Internal,
};

const char* to_string(ErrorCategory cat);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& what)
      : std::runtime_error(what), category_(cat) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Transport-level failure that a client may retry (connection refused,
// HTTP 408/429/5xx). Anything else raised by a backend is final.
class TransientError : public Error {
 public:
  explicit TransientError(const std::string& what)
      : Error(ErrorCategory::Backend, what) {}
};

[[noreturn]] inline void fail(ErrorCategory cat, const std::string& msg) {
  throw Error(cat, msg);
}

// 64-bit FNV-1a. Stable across platforms; used for cache keys, mock
// scripting and transcript digests. Not cryptographic.
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ull);
std::string hex64(std::uint64_t v);
std::string digest_hex(std::string_view bytes);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
// Lowercases, maps punctuation to spaces and collapses runs of whitespace.
std::string normalize_text(std::string_view s);

bool file_exists(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
// Write-temp-then-rename so concurrent readers never observe partial files.
void write_file_atomic(const std::string& path, std::string_view content);
void ensure_dir(const std::string& path);

std::string base64_encode(std::string_view bytes);

// RFC-4180-style CSV: quoted fields, embedded commas/quotes/newlines.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);
std::string csv_escape(std::string_view field);

struct MeanSem {
  double mean = 0.0;
  double sem = 0.0;
  std::size_t n = 0;
};

// Mean and standard error (sample stddev / sqrt(n)); sem is 0 for n < 2.
MeanSem mean_sem(const std::vector<double>& xs);

// Runs fn(0..count) on up to `workers` threads; rethrows the first worker
// exception after all threads join. workers <= 1 runs inline.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace rehab
