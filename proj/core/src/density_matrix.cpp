#include "dephasim/density_matrix.hpp"

#include <cmath>

#include "dephasim/errors.hpp"

namespace dephasim {

DensityMatrix DensityMatrix::checked(ComplexMatrix m, const Tolerances& tol) {
    if (m.dim() == 0) throw ArgumentError("DensityMatrix: empty matrix");
    if (!m.all_finite()) throw ArgumentError("DensityMatrix: non-finite entries");
    DensityMatrix rho(std::move(m));
    if (rho.hermiticity() > tol.state_hermitian)
        throw ArgumentError("DensityMatrix: not Hermitian (defect " + std::to_string(rho.hermiticity()) + ")");
    if (rho.trace_defect() > tol.state_trace)
        throw ArgumentError("DensityMatrix: trace differs from 1 by " + std::to_string(rho.trace_defect()));
    const double lo = rho.min_eigenvalue(tol);
    if (lo < tol.state_min_eigenvalue)
        throw ArgumentError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
    return rho;
}

DensityMatrix DensityMatrix::pure(const std::vector<Complex>& amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n == 0) throw ArgumentError("DensityMatrix::pure: empty amplitude vector");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw ArgumentError("DensityMatrix::pure: amplitudes not normalized (|a|^2 = " +
                            std::to_string(norm2) + ")");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return DensityMatrix(std::move(m));
}

double DensityMatrix::min_eigenvalue(const Tolerances& tol) const {
    return eigenvalues_hermitian(m_, tol).front();
}

} // namespace dephasim
