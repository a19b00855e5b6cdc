#include "funceq/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace funceq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce to [0,1) before any trig call; s - floor(s) is exact in binary64,
// which is what makes p(s+1) == p(s) hold bit-for-bit whenever s+1 is exact.
double frac(double s) { return s - std::floor(s); }

} // namespace

double PeriodicMap::value(double s) const {
    const double t = frac(s);
    double acc = a0_;
    for (std::size_t i = 0; i < harmonics_.size(); ++i) {
        const double theta = kTwoPi * static_cast<double>(i + 1) * t;
        acc += harmonics_[i].a * std::cos(theta) + harmonics_[i].b * std::sin(theta);
    }
    return acc;
}

double PeriodicMap::deriv(double s) const {
    const double t = frac(s);
    double acc = 0.0;
    for (std::size_t i = 0; i < harmonics_.size(); ++i) {
        const double j = static_cast<double>(i + 1);
        const double theta = kTwoPi * j * t;
        acc += kTwoPi * j *
               (-harmonics_[i].a * std::sin(theta) + harmonics_[i].b * std::cos(theta));
    }
    return acc;
}

bool PeriodicMap::is_constant() const {
    return std::all_of(harmonics_.begin(), harmonics_.end(),
                       [](const Harmonic& h) { return h.a == 0.0 && h.b == 0.0; });
}

double PeriodicMap::lower_bound() const {
    double sum = 0.0;
    for (const Harmonic& h : harmonics_) sum += std::hypot(h.a, h.b);
    return a0_ - sum;
}

double PeriodicMap::upper_bound() const {
    double sum = 0.0;
    for (const Harmonic& h : harmonics_) sum += std::hypot(h.a, h.b);
    return a0_ + sum;
}

double PeriodicMap::upper_deriv_bound() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < harmonics_.size(); ++i)
        sum += static_cast<double>(i + 1) * std::hypot(harmonics_[i].a, harmonics_[i].b);
    return kTwoPi * sum;
}

PeriodicMap combine(double alpha, const PeriodicMap& p, double beta, const PeriodicMap& q) {
    std::vector<Harmonic> harmonics(std::max(p.degree(), q.degree()));
    for (std::size_t i = 0; i < harmonics.size(); ++i) {
        const Harmonic hp = i < p.degree() ? p.harmonics()[i] : Harmonic{};
        const Harmonic hq = i < q.degree() ? q.harmonics()[i] : Harmonic{};
        harmonics[i] = {alpha * hp.a + beta * hq.a, alpha * hp.b + beta * hq.b};
    }
    return PeriodicMap(alpha * p.a0() + beta * q.a0(), std::move(harmonics));
}

} // namespace funceq
