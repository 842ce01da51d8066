#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace prc {

// Base for every error this library raises on purpose.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex sequence that is not a simple path of the host graph.
struct InvalidPathError : SolverError {
    using SolverError::SolverError;
};

// A reconfiguration step that violates the move definition.
struct IllegalStepError : SolverError {
    using SolverError::SolverError;
};

// Replay of a sequence failed; step_index is the offending step.
struct ReplayError : SolverError {
    std::size_t step_index;
    ReplayError(std::size_t idx, const std::string& what)
        : SolverError(what), step_index(idx) {}
};

// Search exceeded the configured visited-state cap.
struct CapacityError : SolverError {
    std::uint64_t cap;
    explicit CapacityError(std::uint64_t c)
        : SolverError("state cap exceeded (cap=" + std::to_string(c) + ")"), cap(c) {}
};

// Instance text that does not parse; line is 1-based.
struct ParseError : SolverError {
    int line;
    ParseError(int ln, const std::string& what)
        : SolverError("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

// Structurally parsed but semantically invalid instance.
struct ValidationError : SolverError {
    using SolverError::SolverError;
};

struct GenerationError : SolverError {
    using SolverError::SolverError;
};

// Exact computation refused because the input exceeds the configured size limit.
struct SizeLimitError : SolverError {
    using SolverError::SolverError;
};

// A special-case solver invoked on an instance outside its domain.
struct WrongSolverError : SolverError {
    using SolverError::SolverError;
};

// Requested mode is not available for the chosen algorithm.
struct UnsupportedModeError : SolverError {
    using SolverError::SolverError;
};

// Caller violated an internal contract (indicates a bug, not bad input).
struct InternalError : SolverError {
    using SolverError::SolverError;
};

}  // namespace prc
