#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace parkhull {

/// Thrown when an enumeration would exceed the configured work budget.
/// Carries the name of the method that was refused.
class ResourceBoundError : public std::runtime_error {
public:
    ResourceBoundError(std::string method, const std::string& reason)
        : std::runtime_error(method + ": " + reason), method_(std::move(method)) {}

    const std::string& method() const noexcept { return method_; }

private:
    std::string method_;
};

/// Thrown when an exactness guarantee is violated. Seeing this always
/// indicates an implementation bug, never bad input.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace parkhull
