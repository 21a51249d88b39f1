#pragma once

namespace ratrec {

inline constexpr const char* version = "0.1.0";

}  // namespace ratrec
