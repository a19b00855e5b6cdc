#include "funceq/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "funceq/analysis.hpp"
#include "funceq/pspec.hpp"
#include "funceq/sampling.hpp"
#include "funceq/verify.hpp"

namespace funceq {

namespace {

using nlohmann::json;

std::string continuity_rule(double k) {
    if (k < 2.0) return "no solution extends continuously to 1/R unless p == 0";
    if (k == 2.0)
        return "unique continuous extension per boundary value: f = lambda*phi_0 with "
               "f(1/R) = lambda";
    return "every solution extends continuously with f(1/R) = 0";
}

std::string c1_rule(double k) {
    if (k <= 2.0) return "not applicable (k <= 2)";
    if (k < 4.0)
        return "only the zero solution is C1 (nonzero constants give a divergent "
               "derivative, non-constant p an oscillating one)";
    if (k == 4.0)
        return "C1 exactly for p_right = lambda, p_left = -lambda, with f'(1/R) = R*lambda";
    return "every continuously differentiable p gives a C1 solution with f'(1/R) = 0";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(double R, double k) {
    const EquationParams params(R, k);
    json j;
    j["R"] = params.R();
    j["k"] = params.k();
    j["c"] = params.c();
    j["regime"] = to_string(classify_regime(k));
    j["monotone_phi"] = params.c() <= 0.0;
    j["continuity_rule"] = continuity_rule(k);
    j["c1_rule"] = c1_rule(k);
    emit(j);
    return 0;
}

int cmd_sample(double R, double k, const std::string& pspec, const std::string& branch_name,
               double s_min, double s_max, int n, const std::string& out,
               const std::string& format) {
    const EquationParams params(R, k);
    const PeriodicMap p = parse_pspec(pspec);
    Branch branch = Branch::Right;
    if (branch_name == "left")
        branch = Branch::Left;
    else if (branch_name != "right")
        throw precondition_error("--branch must be right or left");

    const BranchSolution sol(params, p, branch);
    const std::vector<SampleRow> rows = make_sample_rows(sol, s_min, s_max, n);

    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file)
            throw precondition_error("cannot open output file '" + out + "'");
    }
    std::ostream& os = out.empty() ? std::cout : file;

    if (format == "csv") {
        write_csv(os, rows);
    } else if (format == "json") {
        json arr = json::array();
        for (const SampleRow& r : rows)
            arr.push_back({{"x", r.x},
                           {"s", r.s},
                           {"f", r.f},
                           {"f_prime", r.f_prime},
                           {"residual", r.residual}});
        os << arr.dump(2) << "\n";
    } else {
        throw precondition_error("--format must be csv or json");
    }

    for (const SampleRow& r : rows)
        if (!row_residual_ok(R, k, r)) {
            std::cerr << "residual tolerance violated at s = " << r.s << "\n";
            return 1;
        }
    return 0;
}

json report_to_json(const VerificationReport& report) {
    json j;
    j["suite"] = report.suite;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["tol"] = report.tol;
    j["worst_error"] = report.worst_error;
    j["worst_inputs"] = report.worst_inputs;
    j["pass"] = report.pass;
    return j;
}

double default_tol(Suite suite) {
    switch (suite) {
        case Suite::Residual: return 1e-10;
        case Suite::Roundtrip: return 1e-9;
        case Suite::Derivative: return 1e-5;
        case Suite::Linearity: return 1e-12;
        case Suite::Witness: return 0.0;
        case Suite::Ode: return 1e-8;
    }
    return 0.0;
}

int cmd_verify(const std::string& suite_name, int trials, std::uint64_t seed, double tol,
               bool tol_given) {
    const Suite suite = suite_from_name(suite_name);
    const VerificationReport report =
        run_suite(suite, trials, seed, tol_given ? tol : default_tol(suite));
    emit(report_to_json(report));
    return report.pass ? 0 : 1;
}

int cmd_witness(double R, double k, const std::string& pspec) {
    const EquationParams params(R, k);
    const PeriodicMap p = parse_pspec(pspec);
    const Witness w = find_nonmonotone_witness(params, p); // validates k = 2, p non-constant
    const BranchSolution sol(params, p, Branch::Right);
    json j;
    j["R"] = params.R();
    j["k"] = params.k();
    j["x_low"] = w.x_low;
    j["x_high"] = w.x_high;
    j["f_low"] = w.f_low;
    j["f_high"] = w.f_high;
    j["phase_low"] = w.phase_low;
    j["phase_high"] = w.phase_high;
    j["p_low"] = w.p_low;
    j["p_high"] = w.p_high;
    j["f_low_check"] = sol.eval(w.x_low);
    j["f_high_check"] = sol.eval(w.x_high);
    j["verified"] = w.x_low < w.x_high && sol.eval(w.x_high) > sol.eval(w.x_low);
    emit(j);
    return 0;
}

json probe_to_json(const std::vector<ProbeEntry>& entries) {
    json arr = json::array();
    for (const ProbeEntry& e : entries)
        arr.push_back({{"delta", e.delta},
                       {"f", e.f},
                       {"slope", e.slope},
                       {"in_window", e.in_window}}); // NaN serializes as null
    return arr;
}

int cmd_report_c1(double R, double k, const std::string& p_right_spec,
                  const std::string& p_left_spec, std::vector<double> ladder) {
    const EquationParams params(R, k);
    const PeriodicMap p_right = parse_pspec(p_right_spec);
    const PeriodicMap p_left = parse_pspec(p_left_spec);
    const SmoothnessVerdict verdict = classify_smoothness(params, p_right, p_left);
    if (ladder.empty()) ladder = default_delta_ladder();
    const GluedSolution glued = glue(params, p_left, p_right);

    json j;
    j["R"] = params.R();
    j["k"] = params.k();
    j["c"] = params.c();
    j["verdict"] = verdict.c1 ? "C1WithDerivative" : "NotC1";
    if (verdict.derivative) j["derivative"] = *verdict.derivative;
    if (verdict.reason) {
        switch (*verdict.reason) {
            case NotC1Reason::DivergentDerivative: j["reason"] = "DivergentDerivative"; break;
            case NotC1Reason::OscillatingDerivative:
                j["reason"] = "OscillatingDerivative";
                break;
            case NotC1Reason::LeftRightMismatch: j["reason"] = "LeftRightMismatch"; break;
        }
    }
    j["L"] = verdict.bracket_limit ? json(*verdict.bracket_limit) : json(nullptr);
    j["probe_right"] = probe_to_json(boundary_probe(glued, Side::Right, ladder));
    j["probe_left"] = probe_to_json(boundary_probe(glued, Side::Left, ladder));
    emit(j);
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"solution families of f(x^2 R) = k/(2xR) f(x): evaluation, "
                 "classification and property verification"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI config with key = value lines mirroring flags "
                                   "(sections per subcommand); flags override it");

    double R = 1.0;
    double k = 2.0;
    std::string pspec = "const:1";
    std::string branch_name = "right";
    double s_min = -5.0;
    double s_max = 3.0;
    int n = 100;
    std::string out;
    std::string format = "csv";
    std::string suite_name;
    int trials = 500;
    std::uint64_t seed = 42;
    double tol = 0.0;
    std::string p_right_spec = "const:1";
    std::string p_left_spec = "const:1";
    std::vector<double> ladder;

    CLI::App* classify = app.add_subcommand("classify", "regime and boundary rules for (R, k)");
    classify->fallthrough(); // lets the global --config appear after the subcommand
    classify->add_option("--R", R, "scale constant R > 0")->required();
    classify->add_option("--k", k, "multiplier constant k > 0")->required();

    CLI::App* sample = app.add_subcommand(
        "sample", "sample one solution branch on a uniform s-grid (x,s,f,f_prime,residual)");
    sample->fallthrough();
    sample->add_option("--R", R)->required();
    sample->add_option("--k", k)->required();
    sample->add_option("--p", pspec, "modulation: const:<v> or fourier:<a0>[;<a>,<b>]...");
    sample->add_option("--branch", branch_name, "right|left");
    sample->add_option("--smin", s_min, "grid start in s (>= -60)");
    sample->add_option("--smax", s_max, "grid end in s (<= 8.2)");
    sample->add_option("--n", n, "number of rows (>= 2)");
    sample->add_option("--out", out, "output path (default stdout)");
    sample->add_option("--format", format, "csv|json");

    CLI::App* verify = app.add_subcommand("verify", "run a randomized verification suite");
    verify->fallthrough();
    verify->add_option("--suite", suite_name,
                       "residual|roundtrip|derivative|linearity|witness|ode")
        ->required();
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    CLI::Option* tol_opt = verify->add_option("--tol", tol, "default depends on the suite");

    CLI::App* witness =
        app.add_subcommand("witness", "non-monotonicity witness for k = 2, non-constant p");
    witness->fallthrough();
    witness->add_option("--R", R)->required();
    witness->add_option("--k", k)->required();
    witness->add_option("--p", pspec)->required();

    CLI::App* report_c1 = app.add_subcommand(
        "report-c1", "C1 verdict at 1/R plus boundary probes for a glued solution");
    report_c1->fallthrough();
    report_c1->add_option("--R", R)->required();
    report_c1->add_option("--k", k)->required();
    report_c1->add_option("--p-right", p_right_spec)->required();
    report_c1->add_option("--p-left", p_left_spec)->required();
    report_c1->add_option("--ladder", ladder, "comma-separated decreasing deltas")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(R, k);
        if (sample->parsed())
            return cmd_sample(R, k, pspec, branch_name, s_min, s_max, n, out, format);
        if (verify->parsed())
            return cmd_verify(suite_name, trials, seed, tol, tol_opt->count() > 0);
        if (witness->parsed()) return cmd_witness(R, k, pspec);
        if (report_c1->parsed())
            return cmd_report_c1(R, k, p_right_spec, p_left_spec, ladder);
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const window_error& e) {
        std::cerr << "window error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace funceq
