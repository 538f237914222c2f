#pragma once

#include <stdexcept>
#include <string>

namespace nls {

// Grid size is not a power of two, or is below the minimum.
struct invalid_resolution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Regularity exponent outside the supported range (0, 2].
struct unsupported_regularity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Step size / cutoff combination violates tau*N <= 1.
struct infeasible_step : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested wavenumber does not fit the grid.
struct out_of_band : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation mixing fields on different grids.
struct grid_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Too few usable rows for a slope fit.
struct insufficient_data : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reference cross-check disagreement above the reliability gate.
struct unreliable_reference : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed field snapshot file.
struct snapshot_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values detected during time stepping.
struct numerical_abort : std::runtime_error {
    long step_index;
    numerical_abort(const std::string& what, long step)
        : std::runtime_error(what), step_index(step) {}
};

}  // namespace nls
