#include "dephasim/dynamics.hpp"

#include <cmath>

#include "dephasim/errors.hpp"

namespace dephasim::dynamics {

CommutingModel commuting_model(std::vector<double> energies, std::vector<double> couplings) {
    if (energies.size() != couplings.size() || energies.empty())
        throw ArgumentError("commuting_model: energies and couplings must have equal nonzero length");
    CommutingModel m;
    m.dim = energies.size();
    m.h = ComplexMatrix(m.dim);
    m.l = ComplexMatrix(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        m.h(i, i) = energies[i];
        m.l(i, i) = couplings[i];
    }
    m.energies = std::move(energies);
    m.couplings = std::move(couplings);
    return m;
}

Trajectory exact_propagate(const CommutingModel& model, const DensityMatrix& rho0,
                           const bath::CoefficientTable& table) {
    if (table.kappa != 0.0)
        throw UnsupportedError("exact_propagate: closed form assumes [L, H] = 0, i.e. kappa = 0");
    if (rho0.dim() != model.dim)
        throw ArgumentError("exact_propagate: state dimension does not match the model");

    const std::size_t n = model.dim;
    Trajectory traj;
    traj.times = table.times;
    traj.states.reserve(table.size());
    traj.purity.reserve(table.size());

    for (std::size_t k = 0; k < table.size(); ++k) {
        const double t = table.times[k];
        const double d = table.d[k];
        const double phi = table.phi[k];
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = rho0(i, i); // populations invariant, copied verbatim
            for (std::size_t j = i + 1; j < n; ++j) {
                const double de = model.energies[i] - model.energies[j];
                const double dl = model.couplings[i] - model.couplings[j];
                const double dl2 = model.couplings[i] * model.couplings[i] -
                                   model.couplings[j] * model.couplings[j];
                const Complex factor = std::exp(Complex{-dl * dl * d, -(de * t + dl2 * phi)});
                m(i, j) = factor * rho0(i, j);
                m(j, i) = std::conj(m(i, j));
            }
        }
        DensityMatrix state = DensityMatrix::unchecked(std::move(m));
        traj.purity.push_back(purity(state));
        traj.states.push_back(std::move(state));
    }
    return traj;
}

namespace {

// drho = -i[H,rho] + F(L rho L - L^2 rho) + conj(F)(L rho L - rho L^2)
//        + G(rho L - L rho) + conj(G)(L rho - rho L)
ComplexMatrix master_rhs(const ComplexMatrix& h, const ComplexMatrix& l, const ComplexMatrix& l2,
                         Complex f, Complex g, const ComplexMatrix& rho) {
    const ComplexMatrix lr = l * rho;
    const ComplexMatrix rl = rho * l;
    const ComplexMatrix lrl = lr * l;
    ComplexMatrix out = Complex{0.0, -1.0} * (h * rho - rho * h);
    out = out + f * (lrl - l2 * rho) + std::conj(f) * (lrl - rho * l2);
    if (g != Complex{0.0, 0.0})
        out = out + g * (rl - lr) + std::conj(g) * (lr - rl);
    return out;
}

} // namespace

Trajectory integrate_master_equation(const ComplexMatrix& h, const ComplexMatrix& l,
                                     const bath::CoefficientTable& table, const DensityMatrix& rho0,
                                     int substeps, const Tolerances& tol) {
    if (substeps < 1) throw ArgumentError("integrate_master_equation: substeps must be >= 1");
    if (h.dim() != l.dim() || h.dim() != rho0.dim())
        throw ArgumentError("integrate_master_equation: dimension mismatch between H, L and the state");
    if (hermiticity_defect(h) > tol.hermitian_input)
        throw ArgumentError("integrate_master_equation: H is not Hermitian");
    if (hermiticity_defect(l) > tol.hermitian_input)
        throw ArgumentError("integrate_master_equation: L is not Hermitian");
    if (table.size() < 4) throw ArgumentError("integrate_master_equation: table too coarse");

    const std::size_t n = h.dim();
    const ComplexMatrix l2 = l * l;
    const bool has_g = table.kappa != 0.0;

    Trajectory traj;
    traj.times = table.times;
    traj.states.reserve(table.size());
    traj.purity.reserve(table.size());

    ComplexMatrix rho = rho0.matrix();
    {
        DensityMatrix s0 = DensityMatrix::unchecked(rho);
        traj.purity.push_back(purity(s0));
        traj.states.push_back(std::move(s0));
    }

    const double hstep = table.dt / substeps;
    auto coeffs = [&](double t, Complex& f, Complex& g) {
        f = table.f_at(t);
        g = has_g ? table.g_at(t) : Complex{0.0, 0.0};
    };

    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
        const double t0 = table.times[k];
        for (int s = 0; s < substeps; ++s) {
            const double t = t0 + s * hstep;
            Complex f, g;

            coeffs(t, f, g);
            const ComplexMatrix k1 = master_rhs(h, l, l2, f, g, rho);
            coeffs(t + 0.5 * hstep, f, g);
            const ComplexMatrix k2 = master_rhs(h, l, l2, f, g, rho + (0.5 * hstep) * k1);
            const ComplexMatrix k3 = master_rhs(h, l, l2, f, g, rho + (0.5 * hstep) * k2);
            coeffs(t + hstep, f, g);
            const ComplexMatrix k4 = master_rhs(h, l, l2, f, g, rho + hstep * k3);

            rho = rho + (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

            // re-Hermitize
            for (std::size_t i = 0; i < n; ++i) {
                rho(i, i) = Complex{rho(i, i).real(), 0.0};
                for (std::size_t j = i + 1; j < n; ++j) {
                    const Complex v = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
                    rho(i, j) = v;
                    rho(j, i) = std::conj(v);
                }
            }

            const double drift = std::abs(trace(rho) - Complex{1.0, 0.0});
            if (!(drift <= tol.integrator_trace_drift))
                throw IntegrationError("integrate_master_equation: trace drift " + std::to_string(drift) +
                                           " at t = " + std::to_string(t + hstep),
                                       t + hstep);
        }
        DensityMatrix state = DensityMatrix::unchecked(rho);
        traj.purity.push_back(purity(state));
        traj.states.push_back(std::move(state));
    }
    return traj;
}

double purity(const DensityMatrix& rho) { return trace(rho.matrix() * rho.matrix()).real(); }

double analytic_purity(std::span<const Complex> amplitudes, std::span<const double> couplings,
                       double d_t) {
    if (amplitudes.size() != couplings.size() || amplitudes.empty())
        throw ArgumentError("analytic_purity: amplitudes and couplings must have equal nonzero length");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw ArgumentError("analytic_purity: amplitudes not normalized (|a|^2 = " +
                            std::to_string(norm2) + ")");

    const std::size_t n = amplitudes.size();
    double p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double dl = couplings[i] - couplings[j];
            // |rho_ij(t)|^2 carries the squared decay factor exp[-2 (l_i-l_j)^2 D]
            p += std::norm(amplitudes[i]) * std::norm(amplitudes[j]) * std::exp(-2.0 * dl * dl * d_t);
        }
    }
    return p;
}

} // namespace dephasim::dynamics
