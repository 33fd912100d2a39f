// dynamics.hpp — State evolution: closed-form dephasing propagator and the
// direct master-equation integrator used as its correctness oracle

#pragma once

#include <span>
#include <vector>

#include "dephasim/bath.hpp"
#include "dephasim/density_matrix.hpp"

namespace dephasim::dynamics {

/// Spectral data of a commuting pair (H, L): simultaneous eigenbasis with
/// energies E_n and coupling eigenvalues l_n, plus the dense diagonal matrices.
struct CommutingModel {
    std::size_t dim = 0;
    std::vector<double> energies;  // E_n
    std::vector<double> couplings; // l_n
    ComplexMatrix h;
    ComplexMatrix l;
};

/// Build a CommutingModel directly from spectra (H and L diagonal in the
/// fixed basis). Throws ArgumentError on mismatched lengths.
CommutingModel commuting_model(std::vector<double> energies, std::vector<double> couplings);

/// Time series of states on the coefficient-table grid, with per-time purity.
/// The two-qubit observables (concurrence, single-qubit coherence) are filled
/// in by twoqubit::attach_observables.
struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<double> purity;
    std::vector<double> concurrence;  // empty unless attached (N = 4)
    std::vector<double> coherence_a;  // |rho_13 + rho_24|, empty unless attached
};

/// Closed-form propagation for commuting (H, L):
///   rho_nm(t) = exp[-i(E_n - E_m) t - i(l_n^2 - l_m^2) Phi(t) - (l_n - l_m)^2 D(t)] rho_nm(0).
/// Diagonal entries are copied, so populations are invariant bit for bit.
/// Requires table.kappa == 0 (throws UnsupportedError otherwise).
Trajectory exact_propagate(const CommutingModel& model, const DensityMatrix& rho0,
                           const bath::CoefficientTable& table);

/// Fixed-step RK4 integration of the time-local master equation
///   drho/dt = -i[H, rho] + F(t)[L rho, L] + conj(F)(t)[L, rho L]
///             + G(t)[rho, L] + conj(G)(t)[L, rho]
/// with coefficients cubically interpolated from the table and the state
/// re-Hermitized after every step. The integration step is the grid step
/// divided by substeps. Throws IntegrationError if the trace drifts by more
/// than the instability tolerance.
Trajectory integrate_master_equation(const ComplexMatrix& h, const ComplexMatrix& l,
                                     const bath::CoefficientTable& table, const DensityMatrix& rho0,
                                     int substeps, const Tolerances& tol = default_tolerances());

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// Purity of a dephasing pure state in closed form:
///   P = sum_ij |a_i|^2 |a_j|^2 exp[-2 (l_i - l_j)^2 D_t],
/// the squared moduli of the propagated matrix entries summed over the grid of
/// eigenvalue differences. D_t is the running integral of F_R at the time of
/// interest. Amplitudes must be normalized.
double analytic_purity(std::span<const Complex> amplitudes, std::span<const double> couplings,
                       double d_t);

} // namespace dephasim::dynamics
