#pragma once

namespace nvread {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nvread
