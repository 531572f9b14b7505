#pragma once

namespace salpeter {

inline constexpr const char* kVersion = "0.1.0";

} // namespace salpeter
