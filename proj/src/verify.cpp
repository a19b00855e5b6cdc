#include "funceq/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace funceq {

namespace {

// Each trial gets its own generator derived from (seed, index): reports do
// not depend on execution order, so trials can be partitioned freely.
std::uint64_t mix(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) : gen_(mix(seed, trial)) {}

    // 53-bit uniform; pinned arithmetic, no library distribution involved.
    double uniform(double lo, double hi) {
        const double t = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + t * (hi - lo);
    }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return (gen_() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

EquationParams draw_params(TrialRng& rng) {
    const double R = rng.uniform(0.1, 10.0);
    const double k = rng.uniform(0.5, 8.0);
    return {R, k};
}

PeriodicMap draw_map(TrialRng& rng, int min_degree) {
    const int d = rng.uniform_int(min_degree, 4);
    const double a0 = rng.uniform(-1.0, 1.0);
    std::vector<Harmonic> hs(static_cast<std::size_t>(d));
    for (Harmonic& h : hs) {
        h.a = rng.uniform(-1.0, 1.0);
        h.b = rng.uniform(-1.0, 1.0);
    }
    return {a0, std::move(hs)};
}

void record_map(std::map<std::string, double>& into, const std::string& prefix,
                const PeriodicMap& p) {
    into[prefix + ".a0"] = p.a0();
    for (std::size_t i = 0; i < p.degree(); ++i) {
        const std::string j = std::to_string(i + 1);
        into[prefix + ".a" + j] = p.harmonics()[i].a;
        into[prefix + ".b" + j] = p.harmonics()[i].b;
    }
}

double sup_abs(const PeriodicMap& p) {
    return std::max(std::fabs(p.lower_bound()), std::fabs(p.upper_bound()));
}

struct Trial {
    double error = 0.0;
    std::map<std::string, double> inputs;
};

Trial residual_trial(TrialRng& rng) {
    const EquationParams params = draw_params(rng);
    const PeriodicMap p = draw_map(rng, 0);
    const Branch branch = rng.coin() ? Branch::Left : Branch::Right;
    const double s = rng.uniform(-10.0, 8.0);
    const BranchSolution sol(params, p, branch);
    // scale by the larger side of the equation: deep on the left branch
    // f(x^2 R) dwarfs f(x) by the factor k/(2xR), and the subtraction can
    // only be accurate relative to that magnitude
    const double f = std::max(std::fabs(sol.eval_at_s(s)), std::fabs(sol.eval_at_s(s + 1.0)));
    const double err = std::fabs(sol.residual_at_s(s)) / (1.0 + f);
    Trial t{err, {{"R", params.R()}, {"k", params.k()},
                  {"branch", branch == Branch::Left ? 1.0 : 0.0}, {"s", s}}};
    record_map(t.inputs, "p", p);
    return t;
}

Trial roundtrip_trial(TrialRng& rng) {
    const EquationParams params = draw_params(rng);
    const PeriodicMap p = draw_map(rng, 0);
    const double s = rng.uniform(-10.0, 8.0);
    const BranchSolution sol(params, p, Branch::Right);
    const double got = reconstruct_p([&](double x) { return sol.eval(x); }, params, s);
    const double err = std::fabs(got - p.value(s));
    Trial t{err, {{"R", params.R()}, {"k", params.k()}, {"s", s}}};
    record_map(t.inputs, "p", p);
    return t;
}

// Central-difference step: the nominal max(|x|,1)*1e-5, capped so the
// stencil never spans more than 1e-4 in s (|ds/dx| = log2(e)/(x u); an
// uncapped step both overshoots the truncation budget near 1/R for large
// R and, on the left branch, can cross x = 0 entirely).
double fd_step(double x, double u) {
    return std::min(1e-5 * std::max(std::fabs(x), 1.0),
                    1e-4 * std::numbers::ln2 * x * u);
}

Trial derivative_trial(TrialRng& rng) {
    const EquationParams params = draw_params(rng);
    const PeriodicMap p = draw_map(rng, 0);
    const Branch branch = rng.coin() ? Branch::Left : Branch::Right;
    const BranchSolution sol(params, p, branch);

    double s = rng.uniform(-5.0, 5.0);
    double x = s_to_x(params, branch, s);
    // the comparison avoids the boundary neighbourhood where f' may be singular
    while (std::fabs(x - params.boundary()) < 1e-3 * params.boundary()) {
        s = rng.uniform(-5.0, 5.0);
        x = s_to_x(params, branch, s);
    }

    const double u = std::exp2(s);
    const double h = fd_step(x, u);
    const double xp = x + h;
    const double xm = x - h;
    const double fd = (sol.eval(xp) - sol.eval(xm)) / (xp - xm);
    const double analytic = sol.eval_prime(x);
    // scale: coefficient bound on |f'| at this point, so points where the
    // bracket happens to vanish stay measurable
    const double scale = std::pow(u, params.c() - 1.0) / (x * x * params.R()) *
                         ((std::fabs(params.c()) + u) * sup_abs(p) +
                          std::numbers::log2e * p.upper_deriv_bound());
    const double denom =
        std::max({std::fabs(analytic), scale, std::numeric_limits<double>::min()});
    const double err = std::fabs(fd - analytic) / denom;
    Trial t{err, {{"R", params.R()}, {"k", params.k()},
                  {"branch", branch == Branch::Left ? 1.0 : 0.0}, {"s", s}, {"h", h}}};
    record_map(t.inputs, "p", p);
    return t;
}

Trial linearity_trial(TrialRng& rng) {
    const EquationParams params = draw_params(rng);
    const PeriodicMap p1 = draw_map(rng, 0);
    const PeriodicMap p2 = draw_map(rng, 0);
    const double alpha = rng.uniform(-2.0, 2.0);
    const double beta = rng.uniform(-2.0, 2.0);
    const Branch branch = rng.coin() ? Branch::Left : Branch::Right;
    const double s = rng.uniform(-10.0, 8.0);
    const BranchSolution sol1(params, p1, branch);
    const BranchSolution sol2(params, p2, branch);
    const BranchSolution sol3(params, combine(alpha, p1, beta, p2), branch);
    const double e1 = alpha * sol1.eval_at_s(s);
    const double e2 = beta * sol2.eval_at_s(s);
    const double e3 = sol3.eval_at_s(s);
    const double err = std::fabs(e3 - (e1 + e2)) / (1.0 + std::fabs(e1) + std::fabs(e2));
    Trial t{err, {{"R", params.R()}, {"k", params.k()},
                  {"branch", branch == Branch::Left ? 1.0 : 0.0}, {"s", s},
                  {"alpha", alpha}, {"beta", beta}}};
    record_map(t.inputs, "p1", p1);
    record_map(t.inputs, "p2", p2);
    return t;
}

Trial witness_trial(TrialRng& rng) {
    const double R = rng.uniform(0.1, 10.0);
    const EquationParams params(R, 2.0);
    PeriodicMap p = draw_map(rng, 1);
    while (p.is_constant()) p = draw_map(rng, 1);
    const Witness w = find_nonmonotone_witness(params, p);
    const BranchSolution sol(params, p, Branch::Right);
    // err < 0 with sound witnesses; ordering failures force +inf
    double err = sol.eval(w.x_low) - sol.eval(w.x_high);
    if (!(w.x_low < w.x_high) || w.f_high != sol.eval(w.x_high) ||
        w.f_low != sol.eval(w.x_low))
        err = std::numeric_limits<double>::infinity();
    Trial t{err, {{"R", R}, {"k", 2.0}, {"x_low", w.x_low}, {"x_high", w.x_high}}};
    record_map(t.inputs, "p", p);
    return t;
}

Trial ode_trial(TrialRng& rng) {
    const double c = rng.uniform(0.1, 2.0);
    const double L = rng.uniform(-2.0, 2.0);
    const double p0 = rng.uniform(-2.0, 2.0);
    const OdeSpec spec{c, L, p0, 1e-3};
    const OdeFlowResult flow = ode_flow(spec);
    const double err = std::fabs(flow.periodicity_defect - ode_defect_closed_form(c, L, p0));
    return {err, {{"c", c}, {"L", L}, {"p0", p0}, {"step", spec.step}}};
}

} // namespace

Suite suite_from_name(const std::string& name) {
    if (name == "residual") return Suite::Residual;
    if (name == "roundtrip") return Suite::Roundtrip;
    if (name == "derivative") return Suite::Derivative;
    if (name == "linearity") return Suite::Linearity;
    if (name == "witness") return Suite::Witness;
    if (name == "ode") return Suite::Ode;
    throw precondition_error("unknown suite '" + name +
                             "' (expected residual|roundtrip|derivative|linearity|witness|ode)");
}

std::string to_string(Suite suite) {
    switch (suite) {
        case Suite::Residual: return "residual";
        case Suite::Roundtrip: return "roundtrip";
        case Suite::Derivative: return "derivative";
        case Suite::Linearity: return "linearity";
        case Suite::Witness: return "witness";
        case Suite::Ode: return "ode";
    }
    return "?";
}

VerificationReport run_suite(Suite suite, int trials, std::uint64_t seed, double tol) {
    if (trials <= 0)
        throw precondition_error("run_suite: trials must be positive");

    VerificationReport report;
    report.suite = to_string(suite);
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;
    report.worst_error = -std::numeric_limits<double>::infinity();

    for (int i = 0; i < trials; ++i) {
        TrialRng rng(seed, static_cast<std::uint64_t>(i));
        Trial t;
        switch (suite) {
            case Suite::Residual: t = residual_trial(rng); break;
            case Suite::Roundtrip: t = roundtrip_trial(rng); break;
            case Suite::Derivative: t = derivative_trial(rng); break;
            case Suite::Linearity: t = linearity_trial(rng); break;
            case Suite::Witness: t = witness_trial(rng); break;
            case Suite::Ode: t = ode_trial(rng); break;
        }
        if (t.error > report.worst_error) {
            report.worst_error = t.error;
            report.worst_inputs = std::move(t.inputs);
            report.worst_inputs["trial"] = static_cast<double>(i);
        }
    }
    report.pass = report.worst_error <= tol;
    return report;
}

} // namespace funceq
