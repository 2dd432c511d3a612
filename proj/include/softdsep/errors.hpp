#pragma once

#include <stdexcept>
#include <string>

namespace softdsep {

// Violation of an internal invariant (a bug, not a user error). The CLI maps
// this to exit code 2, everything derived from std::runtime_error /
// std::invalid_argument to exit code 1.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Input data that makes a statistic undefined (constant column, singular
// correlation, too few samples).
class degenerate_data_error : public std::runtime_error {
public:
    explicit degenerate_data_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad combination of user-provided settings (test/dtype mismatch, missing paths).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace softdsep
