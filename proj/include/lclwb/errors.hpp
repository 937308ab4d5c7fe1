#ifndef LCLWB_ERRORS_HPP
#define LCLWB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lclwb {

// Enumeration or ball generation exceeded a configured size limit.
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A run configuration failed to parse or validate.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Reaching this means a bug in the
// implementation, not bad input; the CLI maps it to a dedicated exit code.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lclwb

#endif
