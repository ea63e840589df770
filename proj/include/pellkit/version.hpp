#pragma once

namespace pellkit {

inline constexpr const char* kToolName = "pellkit";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace pellkit
