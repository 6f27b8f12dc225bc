#pragma once

namespace scfde {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace scfde
