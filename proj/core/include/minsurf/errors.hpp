#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

// Bad user input: malformed files, parameter constraints violated, invalid
// Weierstrass data. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified mathematical identity or inequality failed on the given data.
// CLI exit code 1.
struct check_error : std::runtime_error {
    explicit check_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical machinery failed to converge (root finder, quadrature). CLI exit
// code 3.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace minsurf
