#include "dephasim/bath.hpp"

#include <cmath>

#include "dephasim/errors.hpp"

namespace dephasim::bath {

namespace {

// Integration window for the Ohmic continuum: beyond 40 omega_c the integrand
// is suppressed below 1e-17 of its peak.
constexpr double kCutoffMultiple = 40.0;

double sin_sq_half(double x) { // 1 - cos(x), cancellation-free
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

void check_temperature(double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw ArgumentError("bath: temperature must be finite and >= 0");
}

} // namespace

BathModel BathModel::discrete(std::vector<DiscreteMode> modes, double temperature) {
    check_temperature(temperature);
    if (modes.empty()) throw ArgumentError("bath: discrete mode list must be non-empty");
    for (const DiscreteMode& m : modes) {
        if (!(m.omega > 0.0) || !std::isfinite(m.omega))
            throw ArgumentError("bath: mode frequency must be finite and > 0");
        if (!(m.g >= 0.0) || !std::isfinite(m.g))
            throw ArgumentError("bath: mode coupling must be finite and >= 0");
    }
    return BathModel(std::move(modes), temperature);
}

BathModel BathModel::ohmic(OhmicSpectrum spectrum, double temperature) {
    check_temperature(temperature);
    if (!(spectrum.omega_c > 0.0) || !std::isfinite(spectrum.omega_c))
        throw ArgumentError("bath: cutoff omega_c must be finite and > 0");
    if (!(spectrum.eta_c >= 0.0) || !std::isfinite(spectrum.eta_c))
        throw ArgumentError("bath: coupling eta_c must be finite and >= 0");
    return BathModel(spectrum, temperature);
}

double BathModel::coth_factor(double omega) const {
    if (temperature_ == 0.0) return 1.0;
    return 1.0 / std::tanh(omega / (2.0 * temperature_));
}

double eta_kernel(const BathModel& b, double tau) {
    if (!(tau >= 0.0)) throw ArgumentError("eta_kernel: tau must be >= 0");
    if (b.is_discrete()) {
        double sum = 0.0;
        for (const DiscreteMode& m : b.modes())
            sum += m.g * m.g * b.coth_factor(m.omega) * std::cos(m.omega * tau);
        return sum;
    }
    const OhmicSpectrum& s = b.spectrum();
    return integrate_adaptive(
        [&](double w) { return s.j(w) * b.coth_factor(w) * std::cos(w * tau); }, 0.0,
        kCutoffMultiple * s.omega_c);
}

double nu_kernel(const BathModel& b, double tau) {
    if (!(tau >= 0.0)) throw ArgumentError("nu_kernel: tau must be >= 0");
    if (b.is_discrete()) {
        double sum = 0.0;
        for (const DiscreteMode& m : b.modes()) sum += m.g * m.g * std::sin(m.omega * tau);
        return -sum;
    }
    const OhmicSpectrum& s = b.spectrum();
    return -integrate_adaptive([&](double w) { return s.j(w) * std::sin(w * tau); }, 0.0,
                               kCutoffMultiple * s.omega_c);
}

std::complex<double> coefficient_f(const BathModel& b, double t) {
    if (!(t >= 0.0)) throw ArgumentError("coefficient_f: t must be >= 0");
    if (t == 0.0) return {0.0, 0.0};
    if (b.is_discrete()) {
        double re = 0.0, im = 0.0;
        for (const DiscreteMode& m : b.modes()) {
            const double g2 = m.g * m.g;
            re += g2 * b.coth_factor(m.omega) * std::sin(m.omega * t) / m.omega;
            im -= g2 * sin_sq_half(m.omega * t) / m.omega;
        }
        return {re, im};
    }
    // Exchange the time and frequency integrals: the antiderivatives of
    // cos(w tau) and sin(w tau) are integrated against the spectral density.
    const OhmicSpectrum& s = b.spectrum();
    const double hi = kCutoffMultiple * s.omega_c;
    const double re = integrate_adaptive(
        [&](double w) { return s.j(w) * b.coth_factor(w) * std::sin(w * t) / w; }, 0.0, hi);
    const double im = -integrate_adaptive(
        [&](double w) { return s.j(w) * sin_sq_half(w * t) / w; }, 0.0, hi);
    return {re, im};
}

std::complex<double> coefficient_g(const BathModel& b, double kappa, double t) {
    if (!(t >= 0.0)) throw ArgumentError("coefficient_g: t must be >= 0");
    if (kappa == 0.0 || t == 0.0) return {0.0, 0.0};
    // int_0^t tau cos(w tau) dtau = (cos(wt) + wt sin(wt) - 1) / w^2
    // int_0^t tau sin(w tau) dtau = (sin(wt) - wt cos(wt)) / w^2
    auto tau_cos = [](double w, double t_) {
        const double x = w * t_;
        return (x * std::sin(x) - sin_sq_half(x)) / (w * w);
    };
    auto tau_sin = [](double w, double t_) {
        const double x = w * t_;
        return (std::sin(x) - x * std::cos(x)) / (w * w);
    };
    if (b.is_discrete()) {
        double re = 0.0, im = 0.0;
        for (const DiscreteMode& m : b.modes()) {
            const double g2 = m.g * m.g;
            re += g2 * b.coth_factor(m.omega) * tau_cos(m.omega, t);
            im -= g2 * tau_sin(m.omega, t);
        }
        return kappa * std::complex<double>{re, im};
    }
    const OhmicSpectrum& s = b.spectrum();
    const double hi = kCutoffMultiple * s.omega_c;
    const double re =
        integrate_adaptive([&](double w) { return s.j(w) * b.coth_factor(w) * tau_cos(w, t); }, 0.0, hi);
    const double im = -integrate_adaptive([&](double w) { return s.j(w) * tau_sin(w, t); }, 0.0, hi);
    return kappa * std::complex<double>{re, im};
}

double markov_rate(const BathModel& b) {
    if (b.is_discrete())
        throw UnsupportedError(
            "markov_rate: discrete baths have quasi-periodic F_R with no long-time limit");
    if (b.temperature() == 0.0)
        throw UnsupportedError("markov_rate: the omega -> 0 limit of J(w) coth(w/2T) vanishes at T = 0");
    // (pi/2) * lim_{w->0} J(w) coth(w/2T) = (pi/2) * eta_c * 2T
    return M_PI * b.spectrum().eta_c * b.temperature();
}

std::vector<double> simpson_prefix(const std::vector<double>& f, double dt) {
    const std::size_t n = f.size();
    std::vector<double> p(n, 0.0);
    if (n < 3) {
        if (n == 2) p[1] = 0.5 * dt * (f[0] + f[1]);
        return p;
    }
    // even indices: composite Simpson over interval pairs; odd indices: the
    // quadratic three-point rule for the single trailing interval.
    p[1] = dt / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    for (std::size_t k = 2; k < n; ++k) {
        if (k % 2 == 0)
            p[k] = p[k - 2] + dt / 3.0 * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
        else
            p[k] = p[k - 1] + dt / 12.0 * (-f[k - 2] + 8.0 * f[k - 1] + 5.0 * f[k]);
    }
    return p;
}

CoefficientTable tabulate(const BathModel& b, double kappa, double t_max, int steps) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ArgumentError("tabulate: t_max must be > 0");
    if (steps < 2) throw ArgumentError("tabulate: steps must be >= 2");
    if (steps % 2 != 0) ++steps; // keep the Simpson pairing well formed

    CoefficientTable table;
    table.kappa = kappa;
    table.dt = t_max / steps;
    const std::size_t n = static_cast<std::size_t>(steps) + 1;
    table.times.resize(n);
    table.f_r.resize(n);
    table.f_i.resize(n);
    table.g_r.resize(n);
    table.g_i.resize(n);
    for (std::size_t i = 0; i < n; ++i) table.times[i] = static_cast<double>(i) * table.dt;

    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> f = coefficient_f(b, table.times[i]);
        table.f_r[i] = f.real();
        table.f_i[i] = f.imag();
        const std::complex<double> g = coefficient_g(b, kappa, table.times[i]);
        table.g_r[i] = g.real();
        table.g_i[i] = g.imag();
    }

    if (b.is_discrete()) {
        // exact double antiderivatives of the mode sums
        table.d.resize(n);
        table.phi.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = table.times[i];
            double dsum = 0.0, psum = 0.0;
            for (const DiscreteMode& m : b.modes()) {
                const double g2 = m.g * m.g;
                dsum += g2 * b.coth_factor(m.omega) * sin_sq_half(m.omega * t) / (m.omega * m.omega);
                psum -= g2 * (t - std::sin(m.omega * t) / m.omega) / m.omega;
            }
            table.d[i] = dsum;
            table.phi[i] = psum;
        }
    } else {
        table.d = simpson_prefix(table.f_r, table.dt);
        table.phi = simpson_prefix(table.f_i, table.dt);
    }
    return table;
}

double CoefficientTable::interpolate(const std::vector<double>& column, double t) const {
    const std::size_t n = column.size();
    if (n != times.size() || n < 4)
        throw ArgumentError("CoefficientTable::interpolate: column does not match a grid of >= 4 samples");
    const double clamped = std::min(std::max(t, 0.0), t_max());
    auto cell = static_cast<std::ptrdiff_t>(std::floor(clamped / dt));
    std::ptrdiff_t base = cell - 1;
    base = std::max<std::ptrdiff_t>(0, std::min<std::ptrdiff_t>(base, static_cast<std::ptrdiff_t>(n) - 4));
    const double s = (clamped - times[static_cast<std::size_t>(base)]) / dt;

    const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    const auto i = static_cast<std::size_t>(base);
    return w0 * column[i] + w1 * column[i + 1] + w2 * column[i + 2] + w3 * column[i + 3];
}

std::complex<double> CoefficientTable::f_at(double t) const {
    return {interpolate(f_r, t), interpolate(f_i, t)};
}

std::complex<double> CoefficientTable::g_at(double t) const {
    return {interpolate(g_r, t), interpolate(g_i, t)};
}

} // namespace dephasim::bath
