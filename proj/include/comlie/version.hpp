#pragma once

namespace comlie {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace comlie
