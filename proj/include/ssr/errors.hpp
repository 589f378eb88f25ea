#pragma once

#include <stdexcept>
#include <string>

namespace ssr {

// Thrown when a bracketing solver cannot isolate a root. Reported to the
// caller instead of clamping to the nearest bracket endpoint.
class no_root_error : public std::runtime_error {
public:
    explicit no_root_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ssr
