#pragma once

namespace pickaudit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pickaudit
