#pragma once

namespace monocf {

inline constexpr const char* kToolName = "monocf";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace monocf
