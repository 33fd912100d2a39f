// twoqubit.hpp — The concrete two-qubit dephasing model: concurrence, reduced
// states, robust/fragile taxonomy and the two decoherence time scales

#pragma once

#include <array>

#include "dephasim/dynamics.hpp"

namespace dephasim::twoqubit {

/// Qubit splittings and Ising coupling, all in units of omega_0.
struct TwoQubitParams {
    double omega_a = 0.0;
    double omega_b = 0.0;
    double j = 0.0;
};

/// Normalized amplitudes in the basis |1> = |++>, |2> = |+->, |3> = |-+>,
/// |4> = |-->. Construction enforces normalization to 1e-12.
class PureStateAmplitudes {
public:
    explicit PureStateAmplitudes(std::array<Complex, 4> a);

    const std::array<Complex, 4>& values() const { return a_; }
    const Complex& operator[](std::size_t i) const { return a_[i]; }

    DensityMatrix projector() const;

private:
    std::array<Complex, 4> a_;
};

enum class StateKind { Separable, Robust, Fragile, Generic };

/// Taxonomy result: the class and the asymptotic concurrence
/// C_inf = 2 max(0, |a2 a3| - |a1 a4|) that survives full dephasing.
struct StateClass {
    StateKind kind;
    double c_inf;
};

const char* to_string(StateKind k);

/// Decoherence time scales for a Markov rate Gamma:
/// tau_e = 1/(16 Gamma) for entanglement, tau_phi = 1/(4 Gamma) for local
/// dephasing; the ratio tau_phi / tau_e is exactly 4.
struct TimeScales {
    double tau_e;
    double tau_phi;
    double gamma;
};

/// Two-qubit dephasing model with H = wA sz^A + wB sz^B + J sz^A sz^B and
/// L = sz^A + sz^B. Spectrum E = (wA+wB+J, wA-wB-J, -wA+wB-J, -wA-wB+J),
/// couplings l = (2, 0, 0, -2); the dense matrices are assembled from
/// Kronecker products.
dynamics::CommutingModel build_model(const TwoQubitParams& p);

/// Wootters concurrence from the spectrum of rho * rho_tilde with
/// rho_tilde = (sy (x) sy) conj(rho) (sy (x) sy), conjugation taken in the
/// fixed standard basis. Eigenvalues whose real part sits below the machine-
/// noise threshold are treated as exact zeros before the square root.
double concurrence(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// Concurrence of a pure state, C = 2 |a2 a3 - a1 a4|.
double pure_concurrence(const PureStateAmplitudes& a);

/// Reduced state of qubit A: diagonal (rho11+rho22, rho33+rho44),
/// off-diagonal rho13 + rho24.
ComplexMatrix reduce_a(const DensityMatrix& rho);

/// Reduced state of qubit B: diagonal (rho11+rho33, rho22+rho44),
/// off-diagonal rho12 + rho34.
ComplexMatrix reduce_b(const DensityMatrix& rho);

/// Classify an initial pure state by the exact-zero pattern of its amplitudes:
/// Separable (|a2 a3 - a1 a4| <= tol), Robust (a1 or a4 vanishes with
/// a2 a3 nonzero), Fragile (a2 or a3 vanishes with a1 a4 nonzero), otherwise
/// Generic. C_inf is reported in every branch.
StateClass classify(const PureStateAmplitudes& a, double tol = 1e-12);

/// tau_e = 1/(16 Gamma), tau_phi = 1/(4 Gamma); Gamma must be positive.
TimeScales time_scales(double gamma);

/// Concurrence of a fragile state in closed form, 2 |a1 a4| exp(-16 D_t).
/// Negative D_t is allowed (discrete-bath revivals).
double fragile_concurrence_analytic(Complex a1, Complex a4, double d_t);

/// |rho_13 + rho_24|, the modulus of the reduced qubit-A coherence.
double coherence_a(const DensityMatrix& rho);

/// Fill the concurrence and coherence_a columns of a 4-dimensional trajectory.
void attach_observables(dynamics::Trajectory& traj, const Tolerances& tol = default_tolerances());

} // namespace dephasim::twoqubit
