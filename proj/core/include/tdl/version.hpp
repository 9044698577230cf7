#pragma once

namespace tdl {

inline constexpr const char* kEngineName = "tdl";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace tdl
