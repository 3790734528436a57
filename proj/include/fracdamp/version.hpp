#pragma once

namespace fracdamp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fracdamp
