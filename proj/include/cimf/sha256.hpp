#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace cimf {

// System-wide content hash: SHA-256, lowercase hex, 64 chars.
// Filenames carry the first 16 hex chars; metadata keeps the full digest.
inline constexpr const char* kHashAlgorithm = "sha256";
inline constexpr size_t kDigestHexLen = 64;
inline constexpr size_t kNamePrefixLen = 16;

class Sha256 {
public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const void* data, size_t len);
  void update(std::string_view s) { update(s.data(), s.size()); }
  std::string hex_digest();  // finalizes; object must not be reused after

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace cimf
