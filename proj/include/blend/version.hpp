#pragma once

namespace blend {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace blend
