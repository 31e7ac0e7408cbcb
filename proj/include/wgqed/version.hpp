#pragma once

namespace wgqed {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wgqed
