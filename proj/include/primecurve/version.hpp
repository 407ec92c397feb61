#pragma once

namespace primecurve {

inline constexpr const char* kToolName = "primecurve";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace primecurve
