#pragma once

#include <stdexcept>
#include <string>

namespace qpd {

// Invalid or inconsistent user input (config files, parameter structs).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integration/fit failures detected at runtime (trace drift, non-convergence).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qpd
