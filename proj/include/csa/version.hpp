#pragma once

namespace csa {

inline constexpr const char* kVersion = "csa 0.1.0";

}  // namespace csa
