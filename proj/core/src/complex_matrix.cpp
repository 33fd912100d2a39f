#include "dephasim/complex_matrix.hpp"

#include <cmath>

#include "dephasim/errors.hpp"

namespace dephasim {

ComplexMatrix ComplexMatrix::from_rows(std::size_t n, std::initializer_list<Complex> entries) {
    if (entries.size() != n * n)
        throw ArgumentError("from_rows: expected " + std::to_string(n * n) + " entries, got " +
                            std::to_string(entries.size()));
    ComplexMatrix m(n);
    std::size_t k = 0;
    for (const Complex& c : entries) m.a_[k++] = c;
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& c : a_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

namespace {
void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y, const char* op) {
    if (x.dim() != y.dim())
        throw ArgumentError(std::string(op) + ": dimension mismatch (" + std::to_string(x.dim()) +
                            " vs " + std::to_string(y.dim()) + ")");
}
} // namespace

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "add");
    const std::size_t n = x.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "sub");
    const std::size_t n = x.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "matmul");
    const std::size_t n = x.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex xik = x(i, k);
            if (xik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& x) {
    const std::size_t n = x.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = s * x(i, j);
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& x) { return Complex{s, 0.0} * x; }

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

Complex trace(const ComplexMatrix& m) {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

double max_abs(const ComplexMatrix& m) {
    double mx = 0.0;
    for (const Complex& c : m.data()) mx = std::max(mx, std::abs(c));
    return mx;
}

double hermiticity_defect(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    double mx = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
    return mx;
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows(2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows(2, {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}});
}

ComplexMatrix pauli_z() { return ComplexMatrix::from_rows(2, {1.0, 0.0, 0.0, -1.0}); }

} // namespace dephasim
