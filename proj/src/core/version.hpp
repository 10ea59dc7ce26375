#pragma once

namespace ipent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ipent
