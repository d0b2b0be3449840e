#pragma once

namespace conjforge {

inline constexpr const char* kToolName = "conjforge";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace conjforge
