// Exception types thrown across the library. Every recoverable failure mode
// has its own type so callers (and the CLI exit-code mapping) can distinguish
// precondition violations from degenerate results and numerical breakdown.
#pragma once

#include <stdexcept>
#include <string>

namespace reflectal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unit conversion across incompatible dimensions.
class UnitError : public Error {
public:
    using Error::Error;
};

/// Invalid radial grid parameters.
class GridError : public Error {
public:
    using Error::Error;
};

/// Malformed input file (carries a line number where known).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line = -1)
        : Error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Dressed pair lacks the nonadiabatic-tunneling topology (no barrier-top /
/// well-bottom pair near a diabatic crossing).
class TopologyError : public Error {
public:
    using Error::Error;
};

/// Crossing geometry too symmetric for the adiabatic-geometry parameterization
/// (|x_b - x_t| below threshold, or gamma >= 1 making alpha <= 0).
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// Semiclassical formulas evaluated outside their domain (E <= E_b, beta <= 1, ...).
class ZnDomainError : public Error {
public:
    using Error::Error;
};

/// No valid frequency window (all manifold samples fell in gaps).
class WindowError : public Error {
public:
    using Error::Error;
};

/// Eigensolver grid cannot hold the requested states.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Propagation norm blow-up.
class InstabilityError : public Error {
public:
    using Error::Error;
};

/// Bad run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace reflectal
