#pragma once

#include "vinberg/engine.hpp"

#include <filesystem>
#include <string>

namespace vinberg {

inline constexpr const char* kCacheVersion = "vinberg-cache/1";

// Text encoding of a paused run: a header line with the version and a
// checksum, then the state as JSON.
std::string encode_state(const VinbergState& state);

// Rebuilds a state for the given form and control vector.
//   errors: Error("cache") on version or checksum mismatch and malformed data,
//           Error("cache/form mismatch") when the cache belongs to another input.
VinbergState decode_state(const std::string& text, const QuadraticForm& form, const ControlVector& u0);

void save_state(const VinbergState& state, const std::filesystem::path& path);
VinbergState restore_state(const std::filesystem::path& path, const QuadraticForm& form, const ControlVector& u0);

} // namespace vinberg
