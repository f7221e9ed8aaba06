#pragma once

namespace comprat {

inline constexpr const char* kVersion = "comprat-0.1.0";

} // namespace comprat
