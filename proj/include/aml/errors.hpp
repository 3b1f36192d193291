#pragma once

#include <stdexcept>
#include <string>

namespace aml {

// Bad user input: unknown config keys, malformed flags, impossible settings.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad data: malformed CSV rows, invariant violations, unattainable targets.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace aml
