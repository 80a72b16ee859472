#pragma once

namespace morq {
inline constexpr const char* kVersion = "0.1.0";
}
