// bath.hpp — Bath correlation kernels and time-dependent master-equation coefficients

#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "dephasim/quadrature.hpp"

namespace dephasim::bath {

/// One harmonic mode: coupling g >= 0 and frequency omega > 0, both in units
/// of the global reference frequency omega_0 (hbar = k_B = 1 throughout).
struct DiscreteMode {
    double g = 0.0;
    double omega = 1.0;
};

/// Ohmic spectral density with exponential cutoff, J(w) = eta_c * w * exp(-w/omega_c).
struct OhmicSpectrum {
    double eta_c = 0.0;
    double omega_c = 1.0;
    double j(double omega) const { return eta_c * omega * std::exp(-omega / omega_c); }
};

/// A bath is either a finite list of discrete modes (all kernels in closed
/// form) or an Ohmic continuum (kernels by quadrature), at temperature T >= 0.
/// T = 0 means the thermal coth factor is exactly 1.
class BathModel {
public:
    static BathModel discrete(std::vector<DiscreteMode> modes, double temperature);
    static BathModel ohmic(OhmicSpectrum spectrum, double temperature);

    bool is_discrete() const { return std::holds_alternative<std::vector<DiscreteMode>>(spec_); }
    const std::vector<DiscreteMode>& modes() const { return std::get<std::vector<DiscreteMode>>(spec_); }
    const OhmicSpectrum& spectrum() const { return std::get<OhmicSpectrum>(spec_); }
    double temperature() const { return temperature_; }

    /// coth(omega / 2T), with the exact T = 0 branch.
    double coth_factor(double omega) const;

private:
    BathModel(std::variant<std::vector<DiscreteMode>, OhmicSpectrum> spec, double temperature)
        : spec_(std::move(spec)), temperature_(temperature) {}
    std::variant<std::vector<DiscreteMode>, OhmicSpectrum> spec_;
    double temperature_ = 0.0;
};

/// Sampled coefficients on a uniform time grid: F_R, F_I, the running
/// integrals D = int F_R and Phi = int F_I, and the non-Markovian phase
/// coefficient G (already multiplied by kappa).
struct CoefficientTable {
    double dt = 0.0;
    double kappa = 0.0;
    std::vector<double> times;
    std::vector<double> f_r, f_i;
    std::vector<double> g_r, g_i;
    std::vector<double> d;   // D(t)   = int_0^t F_R
    std::vector<double> phi; // Phi(t) = int_0^t F_I

    std::size_t size() const { return times.size(); }
    double t_max() const { return times.empty() ? 0.0 : times.back(); }

    /// 4-point Lagrange interpolation of a stored column at time t.
    double interpolate(const std::vector<double>& column, double t) const;

    std::complex<double> f_at(double t) const;
    std::complex<double> g_at(double t) const;
};

/// Real kernel eta(tau) of the bath correlation function alpha = eta + i nu.
double eta_kernel(const BathModel& b, double tau);

/// Imaginary kernel nu(tau); temperature independent.
double nu_kernel(const BathModel& b, double tau);

/// F(t) = int_0^t alpha(tau) d tau.
std::complex<double> coefficient_f(const BathModel& b, double t);

/// G(t) = kappa * int_0^t alpha(tau) tau d tau; exactly zero for kappa = 0.
std::complex<double> coefficient_g(const BathModel& b, double kappa, double t);

/// Markov rate Gamma = lim_{t->inf} F_R(t), evaluated from the omega -> 0
/// limit of (pi/2) J(omega) coth(omega/2T). Defined only for Ohmic baths with
/// T > 0; throws UnsupportedError otherwise.
double markov_rate(const BathModel& b);

/// Sample F, G on the uniform grid over [0, t_max] and accumulate D, Phi.
/// An odd step count is padded to the next even one so the composite-Simpson
/// accumulation used for continuum baths is well formed; discrete baths use
/// the closed forms for every column.
CoefficientTable tabulate(const BathModel& b, double kappa, double t_max, int steps);

/// Simpson-based running integral of uniformly sampled values (the
/// accumulation rule used by tabulate for continuum baths). Exposed so the
/// stored D, Phi columns can be re-derived bit-exactly.
std::vector<double> simpson_prefix(const std::vector<double>& f, double dt);

} // namespace dephasim::bath
