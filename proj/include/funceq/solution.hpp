#pragma once

#include <cmath>
#include <utility>

#include "funceq/params.hpp"
#include "funceq/periodic.hpp"

namespace funceq {

/// Representable window for the conjugacy coordinate s = log2(|ln(xR)|).
/// Above 9.2, exp(2^s) approaches binary64 overflow (2^s ~ 709 at s ~ 9.47);
/// below -60, 2^s drops under the resolution of ln(xR) at representable x.
/// Operations signal window_error outside instead of returning junk.
inline constexpr double kWindowMin = -60.0;
inline constexpr double kWindowMax = 9.2;

inline bool in_window(double s) { return s >= kWindowMin && s <= kWindowMax; }

/// s = log2(ln(xR)) on the right branch, log2(-ln(xR)) on the left.
/// Cancellation-aware near 1/R: ln(xR) = log1p(xR - 1) with the deviation
/// formed by fma. Errors: x outside the open branch domain (including
/// x = 1/R, where s = -inf).
double x_to_s(const EquationParams& params, Branch branch, double x);

/// Inverse coordinate: x = exp(+-2^s)/R. Errors outside the s-window.
double s_to_x(const EquationParams& params, Branch branch, double s);

/// Deviation form of the inverse coordinate: delta = x - 1/R = expm1(+-2^s)/R.
/// Keeps full precision arbitrarily close to the boundary (negative on
/// the left branch).
double s_to_dev(const EquationParams& params, Branch branch, double s);

/// s for a point given as its deviation delta = x - 1/R from the boundary.
double dev_to_s(const EquationParams& params, Branch branch, double delta);

/// The special solution phi_c(x) = (ln(xR))^c / (xR) on x > 1/R
/// (p == 1 member of the family). Uniform domain error at x <= 1/R.
double eval_phi(const EquationParams& params, double x);

/// One branch of the general solution family,
///
///   right: f(x) = (ln(xR))^c /(xR) * p(log2(ln(xR)))      on x > 1/R,
///   left:  f(x) = (-ln(xR))^c/(xR) * p(log2(-ln(xR)))     on 0 < x < 1/R.
///
/// Evaluation routes through s internally: with u = 2^s,
/// f = u^c * p(s) / (xR). Three equivalent entry points are provided:
/// absolute x, deviation delta = x - 1/R, and s itself. Each input
/// parametrizes a different region faithfully: absolute x resolves the
/// boundary deviation only down to s ~ -11, the deviation form reaches
/// the window floor but (on the left branch) degrades once delta*R nears
/// -1, and s covers the whole window exactly. Samplers and sweeps draw s
/// and use the s entry.
class BranchSolution {
public:
    BranchSolution(EquationParams params, PeriodicMap p, Branch branch)
        : params_(std::move(params)), p_(std::move(p)), branch_(branch) {}

    const EquationParams& params() const { return params_; }
    const PeriodicMap& p() const { return p_; }
    Branch branch() const { return branch_; }

    double eval(double x) const;
    double eval_dev(double delta) const;
    double eval_at_s(double s) const;

    /// Closed-form derivative,
    ///   right: (ln(xR))^(c-1)/(x^2 R) * [ (c - ln(xR)) p(s) + log2(e) p'(s) ],
    ///   left: -(-ln(xR))^(c-1)/(x^2 R) * [ (c - ln(xR)) p(t) + log2(e) p'(t) ]
    /// with t = log2(-ln(xR)); note c - ln(xR) = c + |ln(xR)| there.
    double eval_prime(double x) const;
    double eval_prime_dev(double delta) const;
    double eval_prime_at_s(double s) const;

    /// eval(x^2 R) - k/(2xR) * eval(x); identically zero in exact
    /// arithmetic. Both points must be evaluable. In binary64 the
    /// cancellation is accurate relative to the larger side of the
    /// equation, max(|f(x)|, |f(x^2 R)|).
    double residual(double x) const;
    /// Residual at x = exp(+-2^s)/R, computed without leaving the
    /// s-coordinate (x^2 R sits at exactly s+1).
    double residual_at_s(double s) const;

private:
    EquationParams params_;
    PeriodicMap p_;
    Branch branch_;
};

/// Extracts the modulation from any solution f of the equation:
///   p(s) = (2/k)^s * exp(2^s) * f(exp(2^s)/R).
/// When f is the eval of a BranchSolution built from q, this returns q(s).
template <typename F>
double reconstruct_p(F&& f, const EquationParams& params, double s) {
    if (!in_window(s))
        throw window_error("reconstruct_p: s outside the representable window");
    const double grand = std::exp(std::exp2(s)); // exp(2^s), finite inside the window
    const double x = grand / params.R();
    return std::pow(2.0 / params.k(), s) * (grand * f(x));
}

} // namespace funceq
