#pragma once

namespace funceq {

/// Command-line front end (classify / sample / verify / witness /
/// report-c1). Exit codes: 0 success, 1 verification failure, 2
/// usage or domain error.
int run_cli(int argc, const char* const* argv);

} // namespace funceq
