// rate_fit.hpp — Exponential decay rates by least squares on log|signal|

#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace dephasim {

struct RateFit {
    double rate;      // decay rate, i.e. minus the slope of log(signal)
    double intercept; // log(signal) extrapolated to t = 0
    std::size_t used; // samples entering the fit
};

/// Least-squares fit of log(values) against times for samples inside
/// [t_lo, t_hi] with value > floor. Returns nullopt when fewer than two
/// samples qualify.
std::optional<RateFit> fit_exponential_rate(std::span<const double> times,
                                            std::span<const double> values, double t_lo,
                                            double t_hi, double floor = 0.0);

} // namespace dephasim
