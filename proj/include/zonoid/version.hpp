#pragma once

namespace zonoid {
inline constexpr const char* kVersion = "0.1.0";
}
