#pragma once

#include <stdexcept>
#include <string>

namespace gridsym {

// Index outside the grid, or a move index past its legal range.
struct BoundsError : std::out_of_range {
    explicit BoundsError(const std::string& what) : std::out_of_range(what) {}
};

// Two grids of different size where equal size is required.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation's stated precondition does not hold (e.g. stabilizing an
// empty cell, destabilizing where no kink exists).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// The cells at a destabilization site do not form a kink.
struct PatternError : std::invalid_argument {
    explicit PatternError(const std::string& what) : std::invalid_argument(what) {}
};

// Invalid user-supplied parameter (non-positive cell size, bad covariance, ...).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Problem too large for an exhaustive-enumeration path.
struct CapacityError : std::invalid_argument {
    explicit CapacityError(const std::string& what) : std::invalid_argument(what) {}
};

// File could not be read or parsed.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gridsym
