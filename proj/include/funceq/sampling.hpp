#pragma once

#include <iosfwd>
#include <vector>

#include "funceq/solution.hpp"

namespace funceq {

/// One row of a solution sample. Rows are produced on a uniform s-grid so
/// the period-1 structure near 1/R stays resolved.
struct SampleRow {
    double x = 0.0;
    double s = 0.0;
    double f = 0.0;
    double f_prime = 0.0;
    double residual = 0.0;
};

/// n rows at s uniform over [s_min, s_max]. Requires n >= 2, the grid
/// inside the s-window, and s_max + 1 inside it too (every row carries a
/// residual, which evaluates at s + 1).
std::vector<SampleRow> make_sample_rows(const BranchSolution& sol, double s_min,
                                        double s_max, int n);

/// Header `x,s,f,f_prime,residual`, one comma-separated line per row,
/// every number at 17 significant digits.
void write_csv(std::ostream& os, const std::vector<SampleRow>& rows);

/// Parses write_csv output back (strict; throws precondition_error).
std::vector<SampleRow> read_csv(std::istream& is);

/// Residual acceptance for a row: |residual| <= 1e-10 * (1 + max(|f|, |f2|))
/// with f2 = f(x^2 R) recovered from the row as residual + k/(2xR) * f.
bool row_residual_ok(double R, double k, const SampleRow& row);

} // namespace funceq
