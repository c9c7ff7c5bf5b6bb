#pragma once

#include <stdexcept>
#include <string>

namespace ccode {

// Bad user-supplied parameter (m < 2, p does not divide n, ...).
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration or transform would exceed a configured size cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Something that must hold by construction did not (failed exact division, ...).
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed code file or grammar string; message carries the location.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural mismatch between codes (sub code not contained in super code).
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A dual certificate failed one of its conditions; the message names it.
struct CertificateRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The LP solver stopped without an optimal basis (iteration limit, ...).
struct SolverLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ccode
