#pragma once

namespace pshnd {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pshnd
