#pragma once
#include <stdexcept>
#include <string>

namespace halasz {

// A precondition or malformed input. CLI maps this to exit code 2.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Memory/scale budget exceeded. CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value produced where the contract requires finite output.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace halasz
