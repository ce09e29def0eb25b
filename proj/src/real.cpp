#include "chepta/real.hpp"

#include <cstdio>

namespace chepta {

std::string Real::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace chepta
