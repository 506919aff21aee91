#pragma once

namespace conemet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace conemet
