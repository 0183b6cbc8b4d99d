#pragma once

namespace blc {
inline constexpr const char* version = "0.1.0";
}
