#pragma once

namespace particover {

inline constexpr const char* kVersion = "1.0.0";

} // namespace particover
