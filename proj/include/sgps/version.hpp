#pragma once

namespace sgps {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sgps
