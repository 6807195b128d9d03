#pragma once
#include <stdexcept>
#include <string>

namespace quadcoh {

/* All mathematically meaningful failure modes get their own type so callers
 * (and the CLI exit-code logic) can tell input errors from internal bugs. */
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroDivisor : MathError {
    ZeroDivisor() : MathError("division by the zero polynomial/scalar") {}
};

struct NonCommuting : MathError {
    int i, j;
    NonCommuting(int i_, int j_)
        : MathError("frame fields " + std::to_string(i_ + 1) + " and " + std::to_string(j_ + 1) + " do not commute"),
          i(i_), j(j_) {}
};

struct DegenerateFrame : MathError {
    DegenerateFrame() : MathError("frame is degenerate: Y_1 ^ ... ^ Y_n = 0") {}
};

struct UnknownIndex : MathError {
    explicit UnknownIndex(int idx)
        : MathError("no catalog entry with index " + std::to_string(idx)) {}
};

struct ParameterViolation : MathError {
    explicit ParameterViolation(const std::string& msg) : MathError(msg) {}
};

struct UnknownSuite : MathError {
    explicit UnknownSuite(const std::string& name)
        : MathError("no verification suite named '" + name + "'") {}
};

struct NotPoisson : MathError {
    NotPoisson() : MathError("[Lambda,Lambda] != 0: not a Poisson tensor") {}
};

struct NotACocycle : MathError {
    NotACocycle() : MathError("input is not a cocycle") {}
};

struct NotTriangular : MathError {
    NotTriangular() : MathError("operator matrices are not upper-triangular") {}
};

struct TriangularizationFailed : MathError {
    TriangularizationFailed()
        : MathError("no simultaneous triangularization over Q(i): characteristic polynomial without Q(i) root") {}
};

struct ExactnessViolation : MathError {
    explicit ExactnessViolation(const std::string& msg) : MathError(msg) {}
};

struct IoError : MathError {
    explicit IoError(const std::string& msg) : MathError(msg) {}
};

} // namespace quadcoh
