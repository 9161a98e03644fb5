#pragma once

#include <stdexcept>
#include <string>

namespace altradix {

/*
 * Error taxonomy, mirrored by the CLI exit codes:
 *   usage errors      -> exit 1 (handled by the CLI itself)
 *   range_error       -> exit 2 (value outside the representable interval)
 *   parse_error       -> exit 3 (malformed text input)
 *   validation_error  -> exit 3 (structurally invalid object or misuse)
 *   internal_error    -> exit 4 (library invariant breached; a bug)
 */

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

struct validation_error : error {
    using error::error;
};

struct range_error : error {
    using error::error;
};

struct internal_error : error {
    using error::error;
};

} // namespace altradix
