#pragma once

#include <stdexcept>
#include <string>

namespace sharesim {

/// Bad user input: malformed documents, out-of-range parameters,
/// inconsistent configuration. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sharesim
