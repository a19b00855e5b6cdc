#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "funceq/analysis.hpp"

namespace funceq {

enum class Suite {
    Residual,   // |f(x^2 R) - k/(2xR) f(x)| <= tol * (1 + |f(x)|)
    Roundtrip,  // |reconstruct_p(eval) - p| <= tol
    Derivative, // eval_prime vs central finite differences of eval
    Linearity,  // solution from alpha*p1 + beta*p2 vs the combination
    Witness,    // k = 2 witnesses verified by direct evaluation
    Ode,        // RK4 defect vs closed form
};

Suite suite_from_name(const std::string& name); // throws precondition_error
std::string to_string(Suite suite);

/// Machine-readable outcome of one randomized sweep. pass is exactly
/// worst_error <= tol; worst_inputs reproduces the worst trial.
struct VerificationReport {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double worst_error = 0.0;
    std::map<std::string, double> worst_inputs;
    bool pass = false;
};

/// Runs `trials` independent draws of the named invariant. Draw
/// distributions are fixed (R in [0.1,10], k in [0.5,8], Fourier degree
/// <= 4 with coefficients in [-1,1], s in [-10,8]; the derivative suite
/// narrows to s in [-5,5]) and each trial's generator is derived from
/// (seed, trial index), so the report is deterministic and trials could
/// be partitioned across workers without changing it.
VerificationReport run_suite(Suite suite, int trials, std::uint64_t seed, double tol);

} // namespace funceq
