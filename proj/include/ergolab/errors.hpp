#pragma once

#include <stdexcept>
#include <string>

namespace ergolab {

// Error taxonomy used across the library. Callers that need to distinguish
// bad inputs from bad configurations catch the specific type; the CLI maps
// input/config errors to exit code 2 and invariant violations to exit 3.

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested computation is valid but the supplied resources/settings are
// insufficient (e.g. precision budget too small for an expanding orbit).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructive operation cannot satisfy its postconditions for the given
// parameters; the message names the violated property.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size cap or similar resource limit was exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is formally in range but dynamically degenerate (e.g. a point lying
// exactly on a heteroclinic cycle).
struct degenerate_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; indicates a bug, not a user mistake.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ergolab
