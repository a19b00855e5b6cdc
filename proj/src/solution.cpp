#include "funceq/solution.hpp"

#include <cmath>
#include <numbers>

namespace funceq {

namespace {

constexpr double kLog2E = std::numbers::log2e;

// A point resolved into the quantities every formula needs:
// u = |ln(xR)| = 2^s, the branch coordinate s, and xR itself.
struct Point {
    double u;
    double s;
    double xR;
    double x;
};

// |ln(xR)| with the cancellation behaviour the boundary analysis needs:
// near 1/R the deviation w = xR - 1 is formed with fma and fed to log1p;
// away from it (|w| >= 0.5) the direct log is the well-conditioned form,
// in particular for left-branch x near 0 where w is pinned against -1.
double x_to_u(const EquationParams& params, Branch branch, double x) {
    const double w = std::fma(x, params.R(), -1.0);
    if (branch == Branch::Right) {
        if (!(w > 0.0))
            throw domain_error("right branch requires x > 1/R");
        return w < 0.5 ? std::log1p(w) : std::log(x * params.R());
    }
    if (!(x > 0.0))
        throw domain_error("left branch requires x > 0");
    if (!(w < 0.0))
        throw domain_error("left branch requires x < 1/R");
    return w > -0.5 ? -std::log1p(w) : -std::log(x * params.R());
}

Point point_from_x(const EquationParams& params, Branch branch, double x) {
    const double u = x_to_u(params, branch, x);
    // near the boundary the fma-formed deviation loses nothing; far from it
    // (w pinned against -1 on the left) the direct product is the exact form
    const double w = std::fma(x, params.R(), -1.0);
    const double xR = std::fabs(w) < 0.5 ? 1.0 + w : x * params.R();
    return {u, std::log2(u), xR, x};
}

Point point_from_dev(const EquationParams& params, Branch branch, double delta) {
    const double w = delta * params.R();
    double u = 0.0;
    if (branch == Branch::Right) {
        if (!(w > 0.0))
            throw domain_error("right branch requires delta > 0");
        u = std::log1p(w);
    } else {
        if (!(w < 0.0))
            throw domain_error("left branch requires delta < 0");
        if (!(w > -1.0))
            throw domain_error("left branch requires x = 1/R + delta > 0");
        u = -std::log1p(w);
    }
    const double xR = 1.0 + w;
    return {u, std::log2(u), xR, xR / params.R()};
}

Point point_from_s(const EquationParams& params, Branch branch, double s) {
    if (!in_window(s))
        throw window_error("s outside the representable window [-60, 9.2]");
    const double u = std::exp2(s);
    const double xR = branch == Branch::Right ? std::exp(u) : std::exp(-u);
    return {u, s, xR, xR / params.R()};
}

void require_window(const Point& pt) {
    if (!in_window(pt.s))
        throw window_error("x maps outside the representable s-window [-60, 9.2]");
}

double eval_core(const EquationParams& params, const PeriodicMap& p, const Point& pt) {
    const double f = std::pow(pt.u, params.c()) * p.value(pt.s) / pt.xR;
    if (!std::isfinite(f))
        throw window_error("value overflows binary64 at this point");
    return f;
}

// Closed-form derivative; on the left branch d(-ln(xR))/dx = -1/x flips
// the overall sign and turns the bracket term into (c + |ln(xR)|).
double eval_prime_core(const EquationParams& params, const PeriodicMap& p, Branch branch,
                       const Point& pt) {
    const double c = params.c();
    const double pv = p.value(pt.s);
    const double dv = p.deriv(pt.s);
    const double sign = branch == Branch::Right ? 1.0 : -1.0;
    const double bracket = (c - sign * pt.u) * pv + kLog2E * dv;
    // divide stepwise so x^2*R never overflows as an intermediate
    const double fp = sign * std::pow(pt.u, c - 1.0) * bracket / pt.x / pt.x / params.R();
    if (!std::isfinite(fp))
        throw window_error("derivative overflows binary64 at this point");
    return fp;
}

} // namespace

double derive_c(double k) {
    if (!(k > 0.0))
        throw domain_error("derive_c: k must be positive");
    return std::log2(k / 2.0);
}

double x_to_s(const EquationParams& params, Branch branch, double x) {
    return std::log2(x_to_u(params, branch, x));
}

double s_to_x(const EquationParams& params, Branch branch, double s) {
    if (!in_window(s))
        throw window_error("s_to_x: s outside the representable window [-60, 9.2]");
    const double u = std::exp2(s);
    return (branch == Branch::Right ? std::exp(u) : std::exp(-u)) / params.R();
}

double s_to_dev(const EquationParams& params, Branch branch, double s) {
    if (!in_window(s))
        throw window_error("s_to_dev: s outside the representable window [-60, 9.2]");
    const double u = std::exp2(s);
    return (branch == Branch::Right ? std::expm1(u) : std::expm1(-u)) / params.R();
}

double dev_to_s(const EquationParams& params, Branch branch, double delta) {
    return point_from_dev(params, branch, delta).s;
}

double eval_phi(const EquationParams& params, double x) {
    const Point pt = point_from_x(params, Branch::Right, x);
    require_window(pt);
    const double phi = std::pow(pt.u, params.c()) / pt.xR;
    if (!std::isfinite(phi))
        throw window_error("value overflows binary64 at this point");
    return phi;
}

double BranchSolution::eval(double x) const {
    const Point pt = point_from_x(params_, branch_, x);
    require_window(pt);
    return eval_core(params_, p_, pt);
}

double BranchSolution::eval_dev(double delta) const {
    const Point pt = point_from_dev(params_, branch_, delta);
    require_window(pt);
    return eval_core(params_, p_, pt);
}

double BranchSolution::eval_at_s(double s) const {
    return eval_core(params_, p_, point_from_s(params_, branch_, s));
}

double BranchSolution::eval_prime(double x) const {
    const Point pt = point_from_x(params_, branch_, x);
    require_window(pt);
    return eval_prime_core(params_, p_, branch_, pt);
}

double BranchSolution::eval_prime_dev(double delta) const {
    const Point pt = point_from_dev(params_, branch_, delta);
    require_window(pt);
    return eval_prime_core(params_, p_, branch_, pt);
}

double BranchSolution::eval_prime_at_s(double s) const {
    return eval_prime_core(params_, p_, branch_, point_from_s(params_, branch_, s));
}

double BranchSolution::residual(double x) const {
    const double f1 = eval(x);
    const double f2 = eval(x * x * params_.R());
    return f2 - params_.k() / (2.0 * x * params_.R()) * f1;
}

double BranchSolution::residual_at_s(double s) const {
    if (!in_window(s) || !in_window(s + 1.0))
        throw window_error("residual_at_s: s or s+1 outside the representable window");
    const Point p1 = point_from_s(params_, branch_, s);
    // x^2 R sits exactly one period up: u doubles, the phase advances by 1.
    const Point p2 = {2.0 * p1.u, s + 1.0, p1.xR * p1.xR, p1.xR * p1.xR / params_.R()};
    const double f1 = eval_core(params_, p_, p1);
    const double f2 = eval_core(params_, p_, p2);
    return f2 - params_.k() / (2.0 * p1.xR) * f1;
}

} // namespace funceq
