#pragma once

#include <stdexcept>
#include <string>

namespace pasim {

// Bad parameters or malformed configuration. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Bad input data: malformed tables, length mismatches, integrity failures.
// CLI maps this to exit code 3.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pasim
