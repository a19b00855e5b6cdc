#pragma once

#include <string>

#include "funceq/periodic.hpp"

namespace funceq {

/// Textual form of a PeriodicMap:
///   const:<v>
///   fourier:<a0>[;<a_j>,<b_j>]...     (j-th pair = harmonic j, 1-based)
/// Rejects empty harmonics and non-numeric fields (precondition_error).
PeriodicMap parse_pspec(const std::string& text);

/// Canonical text for a map: const form when there are no harmonics,
/// fourier form otherwise. Numbers carry round-trip (17 significant
/// digit) precision, so parse(render(m)) == m exactly.
std::string render_pspec(const PeriodicMap& map);

/// %.17g rendering used everywhere a number must survive a text round trip.
std::string format_double(double v);

/// Strict full-string double parse (throws precondition_error).
double parse_double_strict(const std::string& text);

} // namespace funceq
