#pragma once

namespace bcsketch {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bcsketch
