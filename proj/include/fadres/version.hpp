#pragma once

namespace fadres {

inline constexpr const char* version = "0.1.0";

} // namespace fadres
