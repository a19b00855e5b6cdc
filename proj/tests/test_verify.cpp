#include "funceq/verify.hpp"

#include "doctest.h"

using namespace funceq;

TEST_CASE("suite names") {
    CHECK(suite_from_name("residual") == Suite::Residual);
    CHECK(suite_from_name("roundtrip") == Suite::Roundtrip);
    CHECK(suite_from_name("derivative") == Suite::Derivative);
    CHECK(suite_from_name("linearity") == Suite::Linearity);
    CHECK(suite_from_name("witness") == Suite::Witness);
    CHECK(suite_from_name("ode") == Suite::Ode);
    CHECK_THROWS_AS(suite_from_name("bogus"), precondition_error);
    CHECK_THROWS_AS(run_suite(Suite::Residual, 0, 1, 1e-10), precondition_error);
}

TEST_CASE("suites pass at their nominal tolerances") {
    CHECK(run_suite(Suite::Residual, 300, 42, 1e-10).pass);
    CHECK(run_suite(Suite::Roundtrip, 100, 7, 1e-9).pass);
    CHECK(run_suite(Suite::Derivative, 150, 1, 1e-5).pass);
    CHECK(run_suite(Suite::Linearity, 150, 5, 1e-12).pass);
    CHECK(run_suite(Suite::Witness, 15, 3, 0.0).pass);
    CHECK(run_suite(Suite::Ode, 30, 9, 1e-8).pass);
}

TEST_CASE("reports are deterministic in the seed") {
    const VerificationReport a = run_suite(Suite::Residual, 100, 1234, 1e-10);
    const VerificationReport b = run_suite(Suite::Residual, 100, 1234, 1e-10);
    CHECK(a.worst_error == b.worst_error);
    CHECK(a.worst_inputs == b.worst_inputs);
    CHECK(a.pass == b.pass);

    const VerificationReport c = run_suite(Suite::Residual, 100, 4321, 1e-10);
    CHECK(c.worst_error != a.worst_error); // different seed, different worst trial
}

TEST_CASE("report invariants") {
    const VerificationReport r = run_suite(Suite::Ode, 50, 2, 1e-8);
    CHECK(r.suite == "ode");
    CHECK(r.trials == 50);
    CHECK(r.seed == 2);
    CHECK(r.tol == 1e-8);
    CHECK(r.pass == (r.worst_error <= r.tol));
    CHECK(r.worst_inputs.count("c") == 1);
    CHECK(r.worst_inputs.count("trial") == 1);

    // an unreachable tolerance flips pass, nothing else
    const VerificationReport strict = run_suite(Suite::Residual, 50, 2, 1e-30);
    CHECK_FALSE(strict.pass);
    CHECK(strict.worst_error > 1e-30);
}
