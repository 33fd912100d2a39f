// density_matrix.hpp — Quantum states as validated complex matrices

#pragma once

#include "dephasim/complex_matrix.hpp"
#include "dephasim/eigensolvers.hpp"
#include "dephasim/tolerances.hpp"

namespace dephasim {

/// N x N density matrix. For the two-qubit model N = 4 with the fixed basis
/// ordering |1> = |++>, |2> = |+->, |3> = |-+>, |4> = |-->.
class DensityMatrix {
public:
    /// Validate Hermiticity, unit trace and positivity at the type tolerances;
    /// throws ArgumentError on violation.
    static DensityMatrix checked(ComplexMatrix m, const Tolerances& tol = default_tolerances());

    /// Wrap without validation (for states produced by the propagators, whose
    /// accuracy is governed by the dynamics-level bounds instead).
    static DensityMatrix unchecked(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

    /// Projector |a><a| of a normalized amplitude vector.
    static DensityMatrix pure(const std::vector<Complex>& amplitudes);

    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    double trace_defect() const { return std::abs(trace(m_) - Complex{1.0, 0.0}); }
    double hermiticity() const { return hermiticity_defect(m_); }
    double min_eigenvalue(const Tolerances& tol = default_tolerances()) const;

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

} // namespace dephasim
