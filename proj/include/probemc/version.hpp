#pragma once

namespace probemc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace probemc
