#pragma once

#include <cmath>

#include "funceq/errors.hpp"

namespace funceq {

/// Regime exponent c = log2(k/2). Exact for k an exact power of two
/// (k=2 -> 0, k=4 -> 1, k=1 -> -1).
double derive_c(double k);

/// Which side of the fixed point 1/R of x -> x^2*R a solution lives on.
/// Right: x in (1/R, inf). Left: x in (0, 1/R).
enum class Branch { Right, Left };

/// The triple (R, k, c) defining one instance of
///   f(x^2 R) = k/(2 x R) * f(x).
/// Immutable after construction; c is derived, never stored independently.
class EquationParams {
public:
    EquationParams(double scale, double multiplier)
        : R_(scale), k_(multiplier), c_(derive_c(validate(scale, multiplier))) {}

    double R() const { return R_; }
    double k() const { return k_; }
    double c() const { return c_; }

    /// The fixed point 1/R separating the two branches.
    double boundary() const { return 1.0 / R_; }

    friend bool operator==(const EquationParams&, const EquationParams&) = default;

private:
    static double validate(double scale, double multiplier) {
        if (!(scale > 0.0))
            throw domain_error("EquationParams: R must be positive");
        if (!(multiplier > 0.0))
            throw domain_error("EquationParams: k must be positive");
        return multiplier;
    }

    double R_;
    double k_;
    double c_;
};

} // namespace funceq
