#pragma once

#include <cstdio>
#include <string>

namespace sensorfft::detail {

// 17 significant digits round-trips every double.
inline std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // fold -0 so output is sign-stable
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace sensorfft::detail
