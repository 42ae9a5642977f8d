#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace cimf {

// Shortest decimal representation that parses back to the same double.
// Used everywhere a double is written to a text format, so serialized
// documents are byte-stable across runs.
std::string format_double(double v);

// Wall-clock time as RFC 3339 with nanosecond fraction, UTC.
std::string rfc3339_utc(int64_t ns_since_epoch);
int64_t wall_ns();    // system_clock, ns since epoch
int64_t steady_ns();  // steady_clock, ns since an arbitrary process origin

// Write content to path atomically: temp file in the same directory, flush,
// rename. Parent directories are created as needed.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Relative filename usable inside buckets and sandboxes: no absolute paths,
// no "." / ".." segments, no empty segments, portable charset.
bool valid_logical_name(std::string_view name);

// Identifier for run ids, bucket ids, module names/tags, step ids.
bool valid_identifier(std::string_view name);

std::string random_hex(size_t n_bytes);

}  // namespace cimf
