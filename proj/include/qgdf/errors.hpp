#pragma once

#include <stdexcept>
#include <string>

namespace qgdf {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (bad dimensions, bad file, bad flags).
struct input_error : error {
    using error::error;
};

// Mismatched dimension vectors / out-of-range dimension data.
struct dimension_error : input_error {
    using input_error::input_error;
};

// Incompatible configuration (field mismatch, unsupported quiver shape).
struct config_error : input_error {
    using input_error::input_error;
};

// A claimed subrepresentation is not arrow-stable.
struct stability_error : input_error {
    using input_error::input_error;
};

// A configured resource budget would be exceeded.
struct resource_error : error {
    using error::error;
};

// An internal exactness or consistency guarantee failed. Never expected.
struct invariant_violation : error {
    using error::error;
};

}  // namespace qgdf
