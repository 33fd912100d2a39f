// tolerances.hpp — Central numeric tolerance constants

#pragma once

namespace dephasim {

// Single tuning point for the numerical contracts of the linear-algebra and
// dynamics layers. Values are absolute unless stated otherwise.
struct Tolerances {
    // Input Hermiticity tolerance (max entry of M - M^dagger).
    double hermitian_input = 1e-8;

    // Jacobi eigensolver: off-diagonal norm target relative to the matrix scale,
    // and hard sweep cap.
    double jacobi_off_rel = 1e-15;
    int jacobi_max_sweeps = 64;

    // Shifted-QR eigensolver: subdiagonal deflation threshold relative to the
    // neighbouring diagonal magnitudes, and iteration cap per deflated eigenvalue.
    double qr_deflation_rel = 1e-15;
    int qr_max_iterations_per_eigenvalue = 64;

    // Density-matrix validity: Hermiticity / unit trace / eigenvalue floor.
    double state_hermitian = 1e-10;
    double state_trace = 1e-10;
    double state_min_eigenvalue = -1e-10;

    // Concurrence: cap on |Im| of the eigenvalues of rho * rho_tilde, and the
    // multiple of machine epsilon below which an eigenvalue is treated as an
    // exact zero (rho * rho_tilde is singular for pure and fully dephased
    // states; the square root would otherwise amplify solver noise).
    double concurrence_imag = 1e-8;
    double concurrence_zero_eps_factor = 64.0;

    // Master-equation integrator: trace drift that counts as instability.
    double integrator_trace_drift = 1e-6;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

} // namespace dephasim
