#include "funceq/solution.hpp"

#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

using namespace funceq;

namespace {
const double kE = std::exp(1.0);
}

TEST_CASE("derive_c") {
    CHECK(derive_c(2.0) == 0.0);
    CHECK(derive_c(4.0) == 1.0);
    CHECK(derive_c(1.0) == -1.0);
    CHECK_THROWS_AS(derive_c(0.0), domain_error);
    CHECK_THROWS_AS(derive_c(-3.0), domain_error);
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(EquationParams(0.0, 2.0), domain_error);
    CHECK_THROWS_AS(EquationParams(-1.0, 2.0), domain_error);
    CHECK_THROWS_AS(EquationParams(1.0, 0.0), domain_error);
    TestRng rng(7);
    for (int i = 0; i < 100; ++i) {
        const double k = rng.uniform(0.01, 50.0);
        CHECK(EquationParams(1.0, k).c() == std::log2(k / 2.0));
    }
}

TEST_CASE("x_to_s examples") {
    const EquationParams one(1.0, 2.0);
    CHECK(std::fabs(x_to_s(one, Branch::Right, kE)) <= 1e-12);
    CHECK(x_to_s(one, Branch::Right, kE * kE) == doctest::Approx(1.0).epsilon(1e-13));
    const EquationParams two(2.0, 2.0);
    CHECK(std::fabs(x_to_s(two, Branch::Left, std::exp(-1.0) / 2.0)) <= 1e-12);
}

TEST_CASE("x_to_s domain errors") {
    const EquationParams params(2.0, 3.0);
    CHECK_THROWS_AS(x_to_s(params, Branch::Right, 0.5), domain_error);  // x = 1/R
    CHECK_THROWS_AS(x_to_s(params, Branch::Right, 0.3), domain_error);
    CHECK_THROWS_AS(x_to_s(params, Branch::Left, 0.7), domain_error);
    CHECK_THROWS_AS(x_to_s(params, Branch::Left, 0.0), domain_error);
    CHECK_THROWS_AS(x_to_s(params, Branch::Left, -1.0), domain_error);
}

TEST_CASE("s_to_x examples and window policy") {
    const EquationParams one(1.0, 2.0);
    CHECK(s_to_x(one, Branch::Right, 0.0) == doctest::Approx(kE).epsilon(1e-15));
    CHECK(s_to_x(one, Branch::Left, 0.0) == doctest::Approx(1.0 / kE).epsilon(1e-15));
    const EquationParams two(2.0, 2.0);
    CHECK(s_to_x(two, Branch::Right, 1.0) == doctest::Approx(kE * kE / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(s_to_x(one, Branch::Right, 9.5), window_error);
    CHECK_THROWS_AS(s_to_x(one, Branch::Right, -61.0), window_error);
    // top of the window stays finite
    CHECK(std::isfinite(s_to_x(one, Branch::Right, kWindowMax)));
    CHECK(s_to_x(one, Branch::Left, kWindowMax) > 0.0);
}

TEST_CASE("coordinate round trips") {
    TestRng rng(11);
    for (int t = 0; t < 200; ++t) {
        const EquationParams params = rng.params();
        const Branch branch = (t % 2 == 0) ? Branch::Right : Branch::Left;
        // absolute x carries the boundary deviation only down to s ~ -11
        const double s = rng.uniform(-10.0, 8.0);
        CHECK(std::fabs(x_to_s(params, branch, s_to_x(params, branch, s)) - s) <= 1e-12);
        // the deviation form reaches the window floor; on the left branch
        // it parametrizes faithfully only while delta*R is away from -1
        const double s_deep =
            branch == Branch::Right ? rng.uniform(kWindowMin, 8.2) : rng.uniform(kWindowMin, 2.0);
        CHECK(std::fabs(dev_to_s(params, branch, s_to_dev(params, branch, s_deep)) -
                        s_deep) <= 1e-12);
    }
}

TEST_CASE("eval_phi examples") {
    CHECK(eval_phi(EquationParams(1.0, 2.0), kE) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(eval_phi(EquationParams(2.0, 8.0), kE / 2.0) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-14));
    CHECK(eval_phi(EquationParams(1.0, 4.0), kE * kE) ==
          doctest::Approx(0.2706705664732254).epsilon(1e-14));
}

TEST_CASE("eval_phi uniform domain error at and below 1/R") {
    for (const double k : {1.0, 2.0, 3.0, 4.0, 5.0}) {
        const EquationParams params(2.0, k);
        CHECK_THROWS_AS(eval_phi(params, 0.5), domain_error);
        CHECK_THROWS_AS(eval_phi(params, 0.49), domain_error);
    }
}

TEST_CASE("eval examples") {
    const EquationParams one2(1.0, 2.0);
    CHECK(BranchSolution(one2, PeriodicMap::constant(1.0), Branch::Right).eval(kE) ==
          doctest::Approx(1.0 / kE).epsilon(1e-15));
    CHECK(BranchSolution(one2, cosine_map(1.0, 0.5), Branch::Right).eval(kE) ==
          doctest::Approx(0.5518191617571635).epsilon(1e-13));
    CHECK(BranchSolution(one2, PeriodicMap::constant(1.0), Branch::Left).eval(1.0 / kE) ==
          doctest::Approx(kE).epsilon(1e-14));
}

TEST_CASE("the p == 1 solution is phi_c pointwise") {
    TestRng rng(12);
    for (int t = 0; t < 100; ++t) {
        const EquationParams params = rng.params();
        const BranchSolution sol(params, PeriodicMap::constant(1.0), Branch::Right);
        const double s = rng.uniform(-10.0, 8.0);
        const double x = s_to_x(params, Branch::Right, s);
        const double a = sol.eval(x);
        const double b = eval_phi(params, x);
        CHECK(std::fabs(a - b) <= 1e-15 * std::fabs(b));
    }
}

TEST_CASE("entry points agree on common ground") {
    TestRng rng(13);
    for (int t = 0; t < 100; ++t) {
        const EquationParams params = rng.params();
        const Branch branch = (t % 2 == 0) ? Branch::Right : Branch::Left;
        const PeriodicMap p = rng.map();
        const BranchSolution sol(params, p, branch);
        // stay where both alternate inputs parametrize the point faithfully
        const double s =
            branch == Branch::Right ? rng.uniform(-8.0, 8.0) : rng.uniform(-8.0, 2.0);
        const double x = s_to_x(params, branch, s);
        const double dev = s_to_dev(params, branch, s);
        // scale with a p-floor so p-zeros do not blow up the relative check
        const double u = std::exp2(s);
        const double xR = branch == Branch::Right ? std::exp(u) : std::exp(-u);
        const double p_bound =
            std::max(std::fabs(p.lower_bound()), std::fabs(p.upper_bound())) + 1.0;
        const double fscale = std::pow(u, params.c()) * p_bound / xR;
        const double ref = sol.eval_at_s(s);
        CHECK(std::fabs(sol.eval(x) - ref) <= 1e-9 * fscale);
        CHECK(std::fabs(sol.eval_dev(dev) - ref) <= 1e-11 * fscale);
        const double pscale = std::pow(u, params.c() - 1.0) / (x * x * params.R()) *
                              ((std::fabs(params.c()) + u) * p_bound +
                               1.4426950408889634 * (p.upper_deriv_bound() + 1.0));
        const double refp = sol.eval_prime_at_s(s);
        CHECK(std::fabs(sol.eval_prime_dev(dev) - refp) <= 1e-11 * pscale);
    }
}

TEST_CASE("eval_prime examples") {
    const EquationParams one2(1.0, 2.0);
    const BranchSolution phi0(one2, PeriodicMap::constant(1.0), Branch::Right);
    CHECK(phi0.eval_prime(kE) == doctest::Approx(-1.0 / (kE * kE)).epsilon(1e-14));

    // c = 1: f' tends to R at the boundary
    const EquationParams one4(1.0, 4.0);
    const BranchSolution phi1(one4, PeriodicMap::constant(1.0), Branch::Right);
    CHECK(phi1.eval_prime_dev(1e-8) == doctest::Approx(1.0).epsilon(1e-6));

    // finite-difference oracle at x = 2
    const BranchSolution mod(one2, cosine_map(1.0, 0.5), Branch::Right);
    const double h = 2e-5;
    const double fd = (mod.eval(2.0 + h) - mod.eval(2.0 - h)) / (2.0 * h);
    CHECK(mod.eval_prime(2.0) == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("derivative matches finite differences on both branches") {
    TestRng rng(14);
    for (int t = 0; t < 300; ++t) {
        const EquationParams params = rng.params();
        const Branch branch = (t % 2 == 0) ? Branch::Right : Branch::Left;
        const PeriodicMap p = rng.map();
        const BranchSolution sol(params, p, branch);
        const double s = rng.uniform(-5.0, 5.0);
        const double x = s_to_x(params, branch, s);
        const double u = std::exp2(s);
        const double h = std::min(1e-5 * std::max(std::fabs(x), 1.0),
                                  1e-4 * 0.6931471805599453 * x * u);
        const double xp = x + h;
        const double xm = x - h;
        const double fd = (sol.eval(xp) - sol.eval(xm)) / (xp - xm);
        const double a = sol.eval_prime(x);
        // coefficient bound on |f'| at this point keeps the check sharp
        // yet well-defined at bracket zeros
        const double p_bound =
            std::max(std::fabs(p.lower_bound()), std::fabs(p.upper_bound()));
        const double scale = std::pow(u, params.c() - 1.0) / (x * x * params.R()) *
                             ((std::fabs(params.c()) + u) * p_bound +
                              1.4426950408889634 * p.upper_deriv_bound());
        CHECK(std::fabs(fd - a) <= 1e-5 * std::max(std::fabs(a), scale));
    }
}

TEST_CASE("residual examples") {
    const EquationParams one2(1.0, 2.0);
    const BranchSolution phi0(one2, PeriodicMap::constant(1.0), Branch::Right);
    CHECK(std::fabs(phi0.residual(2.0)) <= 1e-15); // f(4) - f(2)/2 = 1/4 - 1/4

    const EquationParams one3(1.0, 3.0);
    const BranchSolution sol(one3, sine_map(1.0, 0.3), Branch::Right);
    const double f = sol.eval(1.7);
    CHECK(std::fabs(sol.residual(1.7)) <= 1e-10 * (1.0 + std::fabs(f)));
}

TEST_CASE("residual identity over random draws") {
    TestRng rng(15);
    for (int t = 0; t < 400; ++t) {
        const EquationParams params = rng.params();
        const Branch branch = (t % 2 == 0) ? Branch::Right : Branch::Left;
        const BranchSolution sol(params, rng.map(), branch);
        const double s = rng.uniform(-10.0, 8.0);
        // relative to the larger side of the equation
        const double scale =
            1.0 + std::max(std::fabs(sol.eval_at_s(s)), std::fabs(sol.eval_at_s(s + 1.0)));
        CHECK(std::fabs(sol.residual_at_s(s)) <= 1e-10 * scale);
        // absolute-x route, on the part of the window x can resolve
        if (s >= -8.0) {
            const double x = s_to_x(params, branch, s);
            CHECK(std::fabs(sol.residual(x)) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("linearity of the solution family") {
    TestRng rng(16);
    for (int t = 0; t < 200; ++t) {
        const EquationParams params = rng.params();
        const Branch branch = (t % 2 == 0) ? Branch::Right : Branch::Left;
        const PeriodicMap p1 = rng.map();
        const PeriodicMap p2 = rng.map();
        const double alpha = rng.uniform(-2.0, 2.0);
        const double beta = rng.uniform(-2.0, 2.0);
        const BranchSolution s1(params, p1, branch);
        const BranchSolution s2(params, p2, branch);
        const BranchSolution s3(params, combine(alpha, p1, beta, p2), branch);
        const double s = rng.uniform(-10.0, 8.0);
        const double e1 = alpha * s1.eval_at_s(s);
        const double e2 = beta * s2.eval_at_s(s);
        CHECK(std::fabs(s3.eval_at_s(s) - (e1 + e2)) <=
              1e-12 * (1.0 + std::fabs(e1) + std::fabs(e2)));
    }
}

TEST_CASE("reconstruct_p recovers the modulation") {
    // p == 1 gives exactly 1 for any parameters
    TestRng rng(17);
    for (int t = 0; t < 50; ++t) {
        const EquationParams params = rng.params();
        const double s = rng.uniform(-10.0, 8.0);
        const double got =
            reconstruct_p([&](double x) { return eval_phi(params, x); }, params, s);
        CHECK(got == doctest::Approx(1.0).epsilon(1e-11));
    }

    // cos harmonic vanishes at quarter phase
    const EquationParams one2(1.0, 2.0);
    const BranchSolution mod(one2, cosine_map(1.0, 0.5), Branch::Right);
    CHECK(reconstruct_p([&](double x) { return mod.eval(x); }, one2, 0.25) ==
          doctest::Approx(1.0).epsilon(1e-9));

    // round trip against a random degree-3 map at s = -3.7
    TestRng rng2(18);
    const EquationParams params2(rng2.uniform(0.5, 3.0), rng2.uniform(0.5, 8.0));
    const PeriodicMap p3 = rng2.map(3, 3);
    const BranchSolution sol3(params2, p3, Branch::Right);
    const double got = reconstruct_p([&](double x) { return sol3.eval(x); }, params2, -3.7);
    CHECK(std::fabs(got - p3.value(-3.7)) <= 1e-9);
}

TEST_CASE("reconstruct round trip over the sweep window") {
    TestRng rng(19);
    for (int t = 0; t < 100; ++t) {
        const EquationParams params = rng.params();
        const PeriodicMap p = rng.map();
        const BranchSolution sol(params, p, Branch::Right);
        const double s = rng.uniform(-10.0, 8.0);
        const double got = reconstruct_p([&](double x) { return sol.eval(x); }, params, s);
        CHECK(std::fabs(got - p.value(s)) <= 1e-9);
    }
    CHECK_THROWS_AS(reconstruct_p([](double) { return 0.0; }, EquationParams(1.0, 2.0), 9.5),
                    window_error);
}

TEST_CASE("window errors instead of junk") {
    const EquationParams params(1.0, 3.0);
    const BranchSolution sol(params, PeriodicMap::constant(1.0), Branch::Right);
    CHECK_THROWS_AS(sol.eval_at_s(9.3), window_error);
    CHECK_THROWS_AS(sol.eval_at_s(-60.5), window_error);
    CHECK_THROWS_AS(sol.eval_dev(1e-20), window_error);  // s ~ -66
    CHECK_THROWS_AS(sol.eval(1e260), window_error);      // ln(xR) ~ 599, s > 9.2
    CHECK_NOTHROW(sol.eval_at_s(kWindowMax));
    CHECK_NOTHROW(sol.eval_at_s(kWindowMin));
    CHECK_THROWS_AS(sol.residual_at_s(8.5), window_error); // s+1 leaves the window
}

TEST_CASE("left-branch evaluation far from the boundary stays conditioned") {
    // x near 0: -ln(xR) is large; the direct log path must kick in
    const EquationParams params(1.0, 4.0);
    const BranchSolution sol(params, PeriodicMap::constant(-1.0), Branch::Left);
    const double x = 1e-100;
    // f = (-ln x)^1 * (-1) / x = ln(x)/x
    CHECK(sol.eval(x) == doctest::Approx(std::log(x) / x).epsilon(1e-13));
}
