#pragma once

#include <stdexcept>
#include <string>

namespace modelset {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input data: mismatched spaces, inner window not contained in the
/// outer one, malformed descriptors, and similar.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A window with no content where positive measure is required.
struct EmptyWindowError : Error {
    explicit EmptyWindowError(const std::string& what) : Error(what) {}
};

} // namespace modelset
