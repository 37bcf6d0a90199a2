#pragma once

#include <stdexcept>
#include <string>

namespace lctkit {

/// Malformed or out-of-domain input (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size cap was exceeded (CLI exit code 3).
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree did not (CLI exit code 4). Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace lctkit
