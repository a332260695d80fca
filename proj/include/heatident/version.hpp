#pragma once

namespace heatident {

inline constexpr const char* kToolName = "heatident";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace heatident
