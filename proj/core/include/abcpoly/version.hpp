#pragma once

namespace abcpoly {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "abcpoly";

}  // namespace abcpoly
