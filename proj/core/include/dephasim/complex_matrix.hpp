// complex_matrix.hpp — Dense complex matrices at the few-qubit scale

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dephasim {

using Complex = std::complex<double>;

/// Dense N x N complex matrix, row-major. Sized for density matrices and
/// coupling operators of a handful of qubits; not meant for large N.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, Complex{0.0, 0.0}) {}

    /// Build from row-major entries; entries.size() must be a perfect square.
    static ComplexMatrix from_rows(std::size_t n, std::initializer_list<Complex> entries);
    static ComplexMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    const std::vector<Complex>& data() const { return a_; }

    bool all_finite() const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y); // matmul
ComplexMatrix operator*(Complex s, const ComplexMatrix& x);              // scale
ComplexMatrix operator*(double s, const ComplexMatrix& x);

ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

/// Kronecker product, dimension dim(a) * dim(b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |entry|.
double max_abs(const ComplexMatrix& m);

/// Max entry of |m - adjoint(m)|.
double hermiticity_defect(const ComplexMatrix& m);

// Pauli matrices and the two-qubit identity, in the basis with
// sigma_z |+> = +|+>.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

} // namespace dephasim
