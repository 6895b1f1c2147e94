#pragma once

#include <cstdio>
#include <string>

namespace spbox {

// Fixed-format double rendering for CSV and reports. All primary output maps
// bit-identical doubles to identical bytes, which is what the reproducibility
// contract is stated over.
inline std::string fmt_double(double v, int significant = 12) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

}  // namespace spbox
