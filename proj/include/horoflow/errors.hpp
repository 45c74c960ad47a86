#pragma once

#include <stdexcept>
#include <string>

namespace horoflow {

// Non-finite or otherwise malformed arguments.
struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Borel factorization left the chart (lambda0 - s*t0 <= 0).
struct degenerate_factorization_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A matrix drifted to det <= 0; the orbit state is unusable.
struct corrupted_state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group construction failed its validation oracle.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduction exceeded its iteration cap.
struct iteration_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampler acceptance rate collapsed (misconfigured box).
struct rejection_efficiency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Relative position of two states is not in the expected subgroup.
struct relative_position_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace horoflow
