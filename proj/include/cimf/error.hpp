#pragma once

#include <stdexcept>
#include <string>

namespace cimf {

enum class Errc {
  validation,   // malformed input, schema violation, bad payload field
  not_found,    // unknown bucket/object/module/template/run
  conflict,     // duplicate key, hash-prefix collision, idempotency mismatch
  integrity,    // recomputed digest != recorded digest
  unauthorized, // missing/wrong bearer token
  saturated,    // engine at max concurrent runs
  state,        // operation not valid in current run state
  io,           // filesystem / process failures
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  // Validation errors carry the path of the offending field, e.g.
  // "spatial_domain.bbox".
  Error(Errc code, std::string field_path, const std::string& message)
      : std::runtime_error(field_path.empty() ? message
                                              : field_path + ": " + message),
        code_(code), field_(std::move(field_path)) {}

  Errc code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

private:
  Errc code_;
  std::string field_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::validation: return "validation";
    case Errc::not_found: return "not_found";
    case Errc::conflict: return "conflict";
    case Errc::integrity: return "integrity";
    case Errc::unauthorized: return "unauthorized";
    case Errc::saturated: return "saturated";
    case Errc::state: return "state";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace cimf
