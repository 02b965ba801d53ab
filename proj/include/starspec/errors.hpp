#pragma once

#include <stdexcept>
#include <string>

namespace starspec {

// Requested object exceeds a size bound (vertex-count caps and the like).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical check that must hold by construction failed.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace starspec
