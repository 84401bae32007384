#pragma once

#include <stdexcept>
#include <string>

namespace tnlb {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (presentation grammar, job files, DT codes).
/// Carries a 1-based position when the source is line-oriented text.
struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
        : Error(line_ > 0 ? msg + " (line " + std::to_string(line_) + ", col " +
                                std::to_string(col_) + ")"
                          : msg),
          line(line_),
          col(col_) {}
};

/// A structurally valid input that cannot be run: relator images not equal
/// to 1, zero cohomology class, missing mode data, and similar.
struct ConfigError : Error {
    using Error::Error;
};

/// An invariant the library maintains internally was violated; always a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace tnlb
