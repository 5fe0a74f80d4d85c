#pragma once

namespace rcf {

inline constexpr const char* version = "0.1.0";

}  // namespace rcf
