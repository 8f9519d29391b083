#pragma once

namespace knotconc {

inline constexpr const char* kToolName = "knotconc";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace knotconc
