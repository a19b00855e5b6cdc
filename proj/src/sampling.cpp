#include "funceq/sampling.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "funceq/pspec.hpp"

namespace funceq {

std::vector<SampleRow> make_sample_rows(const BranchSolution& sol, double s_min,
                                        double s_max, int n) {
    if (n < 2)
        throw precondition_error("sampling needs n >= 2");
    if (!(s_min < s_max))
        throw precondition_error("sampling needs smin < smax");
    if (!in_window(s_min) || !in_window(s_max + 1.0))
        throw window_error("sample grid must satisfy smin >= -60 and smax <= 8.2 "
                           "(residuals evaluate at s + 1)");
    std::vector<SampleRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // pin the endpoints; interior rounding wobble is harmless
        const double s = i == n - 1 ? s_max : s_min + (s_max - s_min) * i / (n - 1);
        SampleRow row;
        row.s = s;
        row.x = s_to_x(sol.params(), sol.branch(), s);
        row.f = sol.eval_at_s(s);
        row.f_prime = sol.eval_prime_at_s(s);
        row.residual = sol.residual_at_s(s);
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<SampleRow>& rows) {
    os << "x,s,f,f_prime,residual\n";
    for (const SampleRow& r : rows)
        os << format_double(r.x) << ',' << format_double(r.s) << ',' << format_double(r.f)
           << ',' << format_double(r.f_prime) << ',' << format_double(r.residual) << '\n';
}

std::vector<SampleRow> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "x,s,f,f_prime,residual")
        throw precondition_error("bad CSV header: '" + line + "'");
    std::vector<SampleRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        SampleRow row;
        double* fields[5] = {&row.x, &row.s, &row.f, &row.f_prime, &row.residual};
        std::string::size_type start = 0;
        for (int i = 0; i < 5; ++i) {
            const auto pos = i < 4 ? line.find(',', start) : line.size();
            if (pos == std::string::npos)
                throw precondition_error("bad CSV row: '" + line + "'");
            *fields[i] = parse_double_strict(line.substr(start, pos - start));
            start = pos + 1;
        }
        rows.push_back(row);
    }
    return rows;
}

bool row_residual_ok(double R, double k, const SampleRow& row) {
    const double f2 = row.residual + k / (2.0 * row.x * R) * row.f;
    const double scale = 1.0 + std::max(std::fabs(row.f), std::fabs(f2));
    return std::fabs(row.residual) <= 1e-10 * scale;
}

} // namespace funceq
