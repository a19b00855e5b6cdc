#include "funceq/pspec.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace funceq {

double parse_double_strict(const std::string& text) {
    if (text.empty())
        throw precondition_error("empty numeric field");
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw precondition_error("not a finite number: '" + text + "'");
    return value;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

PeriodicMap parse_pspec(const std::string& text) {
    if (text.rfind("const:", 0) == 0)
        return PeriodicMap::constant(parse_double_strict(text.substr(6)));
    if (text.rfind("fourier:", 0) == 0) {
        const std::vector<std::string> fields = split(text.substr(8), ';');
        const double a0 = parse_double_strict(fields[0]);
        std::vector<Harmonic> harmonics;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const std::vector<std::string> pair = split(fields[i], ',');
            if (pair.size() != 2)
                throw precondition_error("harmonic " + std::to_string(i) +
                                         " must be '<a>,<b>', got '" + fields[i] + "'");
            harmonics.push_back({parse_double_strict(pair[0]), parse_double_strict(pair[1])});
        }
        return {a0, std::move(harmonics)};
    }
    throw precondition_error("p-spec must start with 'const:' or 'fourier:', got '" + text +
                             "'");
}

std::string render_pspec(const PeriodicMap& map) {
    if (map.degree() == 0)
        return "const:" + format_double(map.a0());
    std::ostringstream os;
    os << "fourier:" << format_double(map.a0());
    for (const Harmonic& h : map.harmonics())
        os << ';' << format_double(h.a) << ',' << format_double(h.b);
    return os.str();
}

} // namespace funceq
