// eigensolvers.hpp — Dense eigenvalue routines for small complex matrices

#pragma once

#include <vector>

#include "dephasim/complex_matrix.hpp"
#include "dephasim/tolerances.hpp"

namespace dephasim {

/// All eigenvalues of a general complex matrix, unordered.
/// Hessenberg reduction (Householder) followed by shifted QR iteration.
/// Dimension is capped at 8.
std::vector<Complex> eigenvalues_general(const ComplexMatrix& m,
                                         const Tolerances& tol = default_tolerances());

/// Real spectrum of a Hermitian matrix via cyclic Jacobi rotations,
/// ascending order. Input must be Hermitian to tol.hermitian_input.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m,
                                          const Tolerances& tol = default_tolerances());

} // namespace dephasim
