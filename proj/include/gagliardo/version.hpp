#pragma once

namespace gagliardo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gagliardo
