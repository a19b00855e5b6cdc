#pragma once

#include <cstddef>
#include <vector>

#include "funceq/errors.hpp"

namespace funceq {

/// One Fourier harmonic: a*cos(2*pi*j*s) + b*sin(2*pi*j*s).
struct Harmonic {
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// A period-1 modulation function given as a finite trigonometric series
///
///   p(s) = a0 + sum_j (a_j cos(2 pi j s) + b_j sin(2 pi j s)),  j = 1..d.
///
/// Periodicity is exact by construction (the phase is reduced to the
/// fractional part of s before any trig call), the derivative is closed
/// form, and rigorous inf/sup bounds follow from coefficient sums.
class PeriodicMap {
public:
    /// p == value everywhere (degree 0).
    static PeriodicMap constant(double value) { return PeriodicMap(value, {}); }

    PeriodicMap(double mean, std::vector<Harmonic> harmonics)
        : a0_(mean), harmonics_(std::move(harmonics)) {}

    double value(double s) const;
    double deriv(double s) const;

    double operator()(double s) const { return value(s); }

    double a0() const { return a0_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }
    std::size_t degree() const { return harmonics_.size(); }

    /// True when every harmonic coefficient is exactly zero.
    bool is_constant() const;
    /// True when additionally a0 == 0 (the zero function).
    bool is_zero() const { return a0_ == 0.0 && is_constant(); }

    /// a0 - sum_j sqrt(a_j^2 + b_j^2)  <=  min p.
    double lower_bound() const;
    /// a0 + sum_j sqrt(a_j^2 + b_j^2)  >=  max p.
    double upper_bound() const;
    /// 2 pi sum_j j*sqrt(a_j^2 + b_j^2)  >=  max |p'|.
    double upper_deriv_bound() const;

    friend bool operator==(const PeriodicMap&, const PeriodicMap&) = default;

private:
    double a0_;
    std::vector<Harmonic> harmonics_; // index i holds harmonic j = i+1
};

/// alpha*p + beta*q, coefficient-wise.
PeriodicMap combine(double alpha, const PeriodicMap& p, double beta, const PeriodicMap& q);

} // namespace funceq
