#pragma once

#include <stdexcept>
#include <string>

namespace qdup {

// Unrecoverable problems surface as exceptions; the CLI turns them into a
// single-line `error: ...` on stderr with a nonzero exit.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when training numerics go bad (NaN/Inf), naming the offending stage.
struct DiagnosticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qdup
