#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funceq/solution.hpp"

namespace funceq {

// ---------------------------------------------------------------------------
// Regime classification
// ---------------------------------------------------------------------------

/// The four k-regimes; they partition k in (0, inf).
enum class Regime {
    Subcritical,           // k < 2,      c < 0
    Critical,              // k = 2,      c = 0
    SupercriticalRigid,    // 2 < k <= 4, 0 < c <= 1
    SupercriticalFlexible, // k > 4,      c > 1
};

Regime classify_regime(double k);
std::string to_string(Regime r);

// ---------------------------------------------------------------------------
// Monotonicity (right branch)
// ---------------------------------------------------------------------------

/// A concrete violation of monotone decrease: x_low < x_high but
/// f(x_high) > f(x_low). Re-verifiable by two calls to eval. The phases
/// and p-values record where the modulation attains the two values used
/// by the construction.
struct Witness {
    double x_low = 0.0;
    double x_high = 0.0;
    double f_low = 0.0;
    double f_high = 0.0;
    double phase_low = 0.0;  // fractional phase of the min of p
    double phase_high = 0.0; // fractional phase of the max of p
    double p_low = 0.0;
    double p_high = 0.0;
};

enum class Monotonicity {
    MonotoneDecreasingCertified,
    MonotoneIncreasingCertified,
    NotMonotone,
    Inconclusive,
};

struct MonotonicityVerdict {
    Monotonicity kind = Monotonicity::Inconclusive;
    std::optional<Witness> witness; // set only for NotMonotone

    static MonotonicityVerdict certified_decreasing() { return {Monotonicity::MonotoneDecreasingCertified, {}}; }
    static MonotonicityVerdict certified_increasing() { return {Monotonicity::MonotoneIncreasingCertified, {}}; }
    static MonotonicityVerdict inconclusive() { return {Monotonicity::Inconclusive, {}}; }
    static MonotonicityVerdict not_monotone(Witness w) { return {Monotonicity::NotMonotone, std::move(w)}; }
};

/// Sufficient condition for k < 2: with c < 0 and ln(xR) > 0 the derivative
/// bracket is at most c*inf(p) + log2(e)*sup|p'|, so
///   inf p > 0  and  sup|p'| < ln2 * |c| * inf p
/// forces f' < 0 on the whole right branch (and symmetrically for p < 0).
/// Sufficient, not necessary: anything else is Inconclusive.
/// Precondition: k < 2.
MonotonicityVerdict monotone_sufficient(const EquationParams& params, const PeriodicMap& p);

/// For k = 2 and non-constant p, constructs a verified witness against
/// monotone decrease by sliding the max/min phases of p toward 1/R by
/// whole periods until the 1/(xR) envelopes no longer separate them.
/// Preconditions: k = 2, p non-constant.
Witness find_nonmonotone_witness(const EquationParams& params, const PeriodicMap& p);

// ---------------------------------------------------------------------------
// Continuity at 1/R and glued solutions
// ---------------------------------------------------------------------------

enum class Extensibility {
    ExtensibleWithZero,  // continuous extension exists with f(1/R) = 0
    ExtensibleConstant,  // k = 2, p == lambda: extension with f(1/R) = lambda
    NotExtensible,
};

struct ContinuityVerdict {
    Extensibility kind = Extensibility::NotExtensible;
    std::optional<double> lambda; // set for ExtensibleConstant
};

/// Which solutions extend continuously to x = 1/R:
///   k > 2: all of them, with boundary value 0;
///   k = 2: exactly the constant-p ones, with boundary value a0;
///   k < 2: none except p == 0.
ContinuityVerdict classify_continuity(const EquationParams& params, const PeriodicMap& p);

/// A continuous solution on (0, inf) pasted at 1/R. Legal only for k > 2
/// (boundary value 0) or k = 2 with equal constant modulations (boundary
/// value lambda).
class GluedSolution {
public:
    GluedSolution(EquationParams params, PeriodicMap p_left, PeriodicMap p_right,
                  double boundary_value)
        : left_(params, std::move(p_left), Branch::Left),
          right_(params, std::move(p_right), Branch::Right),
          boundary_value_(boundary_value) {}

    const EquationParams& params() const { return right_.params(); }
    const BranchSolution& left() const { return left_; }
    const BranchSolution& right() const { return right_; }
    double boundary_value() const { return boundary_value_; }

    /// Dispatches on the sign of the fma-formed deviation xR - 1;
    /// exactly 0 returns the boundary value.
    double eval(double x) const;
    double eval_dev(double delta) const;

    /// Residual of the branch containing x (x and x^2 R never straddle 1/R).
    double residual(double x) const;

private:
    BranchSolution left_;
    BranchSolution right_;
    double boundary_value_;
};

/// Validates the pasting preconditions and builds the GluedSolution.
GluedSolution glue(const EquationParams& params, const PeriodicMap& p_left,
                   const PeriodicMap& p_right);

// ---------------------------------------------------------------------------
// Continuous differentiability at 1/R
// ---------------------------------------------------------------------------

enum class NotC1Reason {
    DivergentDerivative,  // |f'| -> inf at 1/R
    OscillatingDerivative, // f' has no limit at 1/R (periodic bracket)
    LeftRightMismatch,    // both one-sided limits exist but differ
};

struct SmoothnessVerdict {
    bool c1 = false;
    std::optional<double> derivative;     // f' at 1/R, when c1
    std::optional<NotC1Reason> reason;    // when !c1
    std::optional<double> bracket_limit;  // L, when the right bracket limit exists

    static SmoothnessVerdict smooth(double d, std::optional<double> L) {
        return {true, d, {}, L};
    }
    static SmoothnessVerdict not_c1(NotC1Reason r, std::optional<double> L) {
        return {false, {}, r, L};
    }
};

/// C1 classification of the glued family for k > 2:
///   c > 1: every pair is C1 with boundary derivative 0;
///   c = 1: C1 iff p_right == lambda and p_left == -lambda, derivative R*lambda;
///   0 < c < 1: only the zero solution is C1 (nonzero constants give a
///   divergent derivative, non-constant p an oscillating one).
/// Precondition: k > 2.
SmoothnessVerdict classify_smoothness(const EquationParams& params,
                                      const PeriodicMap& p_right,
                                      const PeriodicMap& p_left);

// ---------------------------------------------------------------------------
// The boundary ODE p' + (c/log2 e) p = L / log2 e
// ---------------------------------------------------------------------------

/// Inputs for one integration of the boundary ODE. A periodic solution
/// needs p(0) = L/c; anything else drifts by a fixed factor per period.
struct OdeSpec {
    double c = 0.0;
    double L = 0.0;
    double p0 = 0.0;   // initial value at s = 0
    double step = 0.0; // RK4 step
};

struct OdeFlowResult {
    double p_at_1 = 0.0;
    double periodicity_defect = 0.0; // p(1) - p(0); closed form (p0 - L/c)(2^-c - 1)
};

/// Classical RK4 over [0, 1]. Errors: step <= 0 or c == 0.
OdeFlowResult ode_flow(const OdeSpec& spec);

/// (p0 - L/c) * (2^-c - 1), the exact defect of the linear flow.
double ode_defect_closed_form(double c, double L, double p0);

// ---------------------------------------------------------------------------
// Boundary probes
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

struct ProbeEntry {
    double delta = 0.0;
    bool in_window = false;       // false: delta under the s-window floor
    double f = 0.0;               // eval_glued(1/R +- delta)
    double slope = 0.0;           // finite-difference slope toward the boundary
};

/// Evaluates the glued solution on a decreasing delta-ladder next to 1/R,
/// recording values and one-sided difference quotients. Window violations
/// are recorded per entry, not raised.
std::vector<ProbeEntry> boundary_probe(const GluedSolution& glued, Side side,
                                       const std::vector<double>& ladder);

/// {1e-3, 1e-4, ..., 1e-12}.
std::vector<double> default_delta_ladder();

} // namespace funceq
