#pragma once

#include <stdexcept>
#include <string>

namespace levyfp {

// Configuration problems: bad config files, unknown keys, invalid experiment setups.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched grids passed to a binary operation.
struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A grid cannot resolve the requested function. Carries an estimate of a
// half-width that would work at the same point count.
struct ResolutionError : std::runtime_error {
    ResolutionError(const std::string& what, double suggested_half_width_)
        : std::runtime_error(what), suggested_half_width(suggested_half_width_) {}
    double suggested_half_width;
};

// Quadrature or iteration failed to reach the requested tolerance.
struct NumericError : std::runtime_error {
    NumericError(const std::string& what, double achieved_tolerance_)
        : std::runtime_error(what), achieved_tolerance(achieved_tolerance_) {}
    double achieved_tolerance;
};

// Weighted-norm tail correction would diverge (weight grows faster than the tail decays).
struct TailCorrectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A kernel family does not provide the requested member (e.g. no classical limit).
struct UnsupportedFamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace levyfp
