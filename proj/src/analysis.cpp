#include "funceq/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace funceq {

namespace {

double frac(double s) { return s - std::floor(s); }

// Golden-section refinement of a maximum inside [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, int iters) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

// Phase in [0,1) where p attains its max (sign=+1) or min (sign=-1):
// 1024-point grid scan plus golden-section refinement around the best cell.
double locate_extremum(const PeriodicMap& p, double sign, int grid_n, int refine_iters) {
    double best_s = 0.0;
    double best_v = sign * p.value(0.0);
    for (int i = 1; i < grid_n; ++i) {
        const double s = static_cast<double>(i) / grid_n;
        const double v = sign * p.value(s);
        if (v > best_v) {
            best_v = v;
            best_s = s;
        }
    }
    const double h = 1.0 / grid_n;
    return golden_max([&](double s) { return sign * p.value(s); }, best_s - h, best_s + h,
                      refine_iters);
}

} // namespace

// ---------------------------------------------------------------------------

Regime classify_regime(double k) {
    if (!(k > 0.0))
        throw domain_error("classify_regime: k must be positive");
    if (k < 2.0) return Regime::Subcritical;
    if (k == 2.0) return Regime::Critical;
    if (k <= 4.0) return Regime::SupercriticalRigid;
    return Regime::SupercriticalFlexible;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "Subcritical";
        case Regime::Critical: return "Critical";
        case Regime::SupercriticalRigid: return "SupercriticalRigid";
        case Regime::SupercriticalFlexible: return "SupercriticalFlexible";
    }
    return "?";
}

// ---------------------------------------------------------------------------

MonotonicityVerdict monotone_sufficient(const EquationParams& params, const PeriodicMap& p) {
    if (!(params.k() < 2.0))
        throw precondition_error("monotone_sufficient: applies to k < 2 only");
    const double margin = std::numbers::ln2 * std::fabs(params.c());
    if (p.lower_bound() > 0.0 && p.upper_deriv_bound() < margin * p.lower_bound())
        return MonotonicityVerdict::certified_decreasing();
    if (p.upper_bound() < 0.0 && p.upper_deriv_bound() < margin * -p.upper_bound())
        return MonotonicityVerdict::certified_increasing();
    return MonotonicityVerdict::inconclusive();
}

Witness find_nonmonotone_witness(const EquationParams& params, const PeriodicMap& p) {
    if (params.k() != 2.0)
        throw precondition_error("find_nonmonotone_witness: requires k = 2");
    if (p.is_constant())
        throw precondition_error("find_nonmonotone_witness: requires non-constant p");

    const double s_max_phase = locate_extremum(p, +1.0, 1024, 40);
    const double s_min_phase = locate_extremum(p, -1.0, 1024, 40);
    const double big = p.value(s_max_phase);
    const double small = p.value(s_min_phase);
    if (!(big > small))
        throw std::runtime_error("find_nonmonotone_witness: could not separate p values");

    // Representative of the min phase below the max phase, so the min
    // point lands at the smaller x within the same period.
    const double s_min_rep = s_min_phase < s_max_phase ? s_min_phase : s_min_phase - 1.0;
    const BranchSolution sol(params, p, Branch::Right);

    for (int n = 0;; ++n) {
        const double sh = s_max_phase - n;
        const double sl = s_min_rep - n;
        if (sl < kWindowMin)
            throw std::runtime_error(
                "find_nonmonotone_witness: exhausted the s-window without a witness");
        const double x_high = s_to_x(params, Branch::Right, sh);
        const double x_low = s_to_x(params, Branch::Right, sl);
        if (!(params.boundary() < x_low && x_low < x_high))
            throw std::runtime_error(
                "find_nonmonotone_witness: x resolution lost before a witness was found");
        double f_high = 0.0;
        double f_low = 0.0;
        try {
            // Same absolute-x path a later re-check will use.
            f_high = sol.eval(x_high);
            f_low = sol.eval(x_low);
        } catch (const window_error&) {
            throw std::runtime_error(
                "find_nonmonotone_witness: left the s-window without a witness");
        }
        if (f_high > f_low)
            return Witness{x_low,           x_high,           f_low, f_high,
                           frac(s_min_rep), frac(s_max_phase), small, big};
    }
}

// ---------------------------------------------------------------------------

ContinuityVerdict classify_continuity(const EquationParams& params, const PeriodicMap& p) {
    if (params.k() > 2.0)
        return {Extensibility::ExtensibleWithZero, {}};
    if (params.k() == 2.0) {
        if (p.is_constant())
            return {Extensibility::ExtensibleConstant, p.a0()};
        return {Extensibility::NotExtensible, {}};
    }
    if (p.is_zero())
        return {Extensibility::ExtensibleWithZero, {}};
    return {Extensibility::NotExtensible, {}};
}

GluedSolution glue(const EquationParams& params, const PeriodicMap& p_left,
                   const PeriodicMap& p_right) {
    if (params.k() > 2.0)
        return GluedSolution(params, p_left, p_right, 0.0);
    if (params.k() == 2.0) {
        if (!p_left.is_constant() || !p_right.is_constant())
            throw precondition_error("glue: k = 2 requires constant modulations");
        if (p_left.a0() != p_right.a0())
            throw precondition_error("glue: k = 2 requires equal boundary constants");
        return GluedSolution(params, p_left, p_right, p_left.a0());
    }
    throw precondition_error("glue: no continuous pasting exists for k < 2");
}

double GluedSolution::eval(double x) const {
    if (!(x > 0.0))
        throw domain_error("glued solution requires x > 0");
    const double w = std::fma(x, params().R(), -1.0);
    if (w > 0.0) return right_.eval(x);
    if (w < 0.0) return left_.eval(x);
    return boundary_value_;
}

double GluedSolution::eval_dev(double delta) const {
    if (delta > 0.0) return right_.eval_dev(delta);
    if (delta < 0.0) return left_.eval_dev(delta);
    if (delta == 0.0) return boundary_value_;
    throw domain_error("glued solution requires a finite deviation");
}

double GluedSolution::residual(double x) const {
    if (!(x > 0.0))
        throw domain_error("glued solution requires x > 0");
    const double w = std::fma(x, params().R(), -1.0);
    if (w > 0.0) return right_.residual(x);
    if (w < 0.0) return left_.residual(x);
    // x = x^2 R = 1/R: f(1/R) - (k/2) f(1/R), zero for both legal regimes
    return boundary_value_ * (1.0 - params().k() / 2.0);
}

// ---------------------------------------------------------------------------

SmoothnessVerdict classify_smoothness(const EquationParams& params,
                                      const PeriodicMap& p_right,
                                      const PeriodicMap& p_left) {
    if (!(params.k() > 2.0))
        throw precondition_error("classify_smoothness: requires k > 2");
    const double c = params.c();
    const bool const_r = p_right.is_constant();
    const bool const_l = p_left.is_constant();
    // Bracket limit from the right; exists only when the modulation stops
    // oscillating, i.e. p_right is constant.
    const std::optional<double> bracket =
        const_r ? std::optional<double>(c * p_right.a0()) : std::nullopt;

    if (c > 1.0) // ln(xR)^(c-1) -> 0 beats the bounded bracket
        return SmoothnessVerdict::smooth(0.0, bracket);

    if (c == 1.0) {
        if (!const_r || !const_l)
            return SmoothnessVerdict::not_c1(NotC1Reason::OscillatingDerivative, bracket);
        // one-sided limits R*lambda (right) and -R*mu (left)
        if (p_left.a0() == -p_right.a0())
            return SmoothnessVerdict::smooth(params.R() * p_right.a0(), bracket);
        return SmoothnessVerdict::not_c1(NotC1Reason::LeftRightMismatch, bracket);
    }

    // 0 < c < 1: ln(xR)^(c-1) diverges, so the bracket limit must be 0.
    if (!const_r || !const_l)
        return SmoothnessVerdict::not_c1(NotC1Reason::OscillatingDerivative, bracket);
    if (p_right.a0() == 0.0 && p_left.a0() == 0.0)
        return SmoothnessVerdict::smooth(0.0, bracket);
    return SmoothnessVerdict::not_c1(NotC1Reason::DivergentDerivative, bracket);
}

// ---------------------------------------------------------------------------

OdeFlowResult ode_flow(const OdeSpec& spec) {
    if (!(spec.step > 0.0))
        throw domain_error("ode_flow: step must be positive");
    if (spec.c == 0.0)
        throw domain_error("ode_flow: c must be nonzero");
    // p' = ln2 * (L - c p), autonomous
    const auto rhs = [&spec](double p) {
        return std::numbers::ln2 * (spec.L - spec.c * p);
    };
    double p = spec.p0;
    for (double s = 0.0; s < 1.0;) {
        const double h = std::min(spec.step, 1.0 - s);
        const double k1 = rhs(p);
        const double k2 = rhs(p + 0.5 * h * k1);
        const double k3 = rhs(p + 0.5 * h * k2);
        const double k4 = rhs(p + h * k3);
        p += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        s += h;
    }
    return {p, p - spec.p0};
}

double ode_defect_closed_form(double c, double L, double p0) {
    return (p0 - L / c) * std::expm1(-c * std::numbers::ln2);
}

// ---------------------------------------------------------------------------

std::vector<ProbeEntry> boundary_probe(const GluedSolution& glued, Side side,
                                       const std::vector<double>& ladder) {
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (!(ladder[i] > 0.0))
            throw precondition_error("boundary_probe: deltas must be positive");
        if (i > 0 && !(ladder[i] < ladder[i - 1]))
            throw precondition_error("boundary_probe: deltas must be strictly decreasing");
    }
    const double bv = glued.boundary_value();
    std::vector<ProbeEntry> entries;
    entries.reserve(ladder.size());
    for (const double delta : ladder) {
        ProbeEntry e;
        e.delta = delta;
        try {
            e.f = glued.eval_dev(side == Side::Right ? delta : -delta);
            e.slope = side == Side::Right ? (e.f - bv) / delta : (bv - e.f) / delta;
            e.in_window = true;
        } catch (const window_error&) {
            e.f = std::numeric_limits<double>::quiet_NaN();
            e.slope = std::numeric_limits<double>::quiet_NaN();
            e.in_window = false;
        }
        entries.push_back(e);
    }
    return entries;
}

std::vector<double> default_delta_ladder() {
    std::vector<double> ladder;
    for (int i = 3; i <= 12; ++i) ladder.push_back(std::pow(10.0, -i));
    return ladder;
}

} // namespace funceq
