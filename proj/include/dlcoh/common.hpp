#pragma once

#include <stdexcept>
#include <string>

namespace dlcoh {

// Raised when a brute-force enumeration would exceed its configured bound.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dlcoh
