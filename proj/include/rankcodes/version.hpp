#pragma once

namespace rankcodes {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rankcodes
