#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>

#include "dephasim/complex_matrix.hpp"
#include "dephasim/density_matrix.hpp"
#include "dephasim/eigensolvers.hpp"
#include "dephasim/errors.hpp"
#include "support/random_states.hpp"

using namespace dephasim;

namespace {

bool matrices_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return max_abs(a - b) <= tol;
}

std::vector<double> sorted_real(std::vector<Complex> v) {
    std::vector<double> r;
    r.reserve(v.size());
    for (const Complex& c : v) r.push_back(c.real());
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace

TEST_CASE("kron identities") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(matrices_close(kron(i2, i2), ComplexMatrix::identity(4), 0.0));

    const ComplexMatrix zz = kron(pauli_z(), pauli_z());
    const ComplexMatrix zz_expected =
        ComplexMatrix::from_rows(4, {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
    CHECK(matrices_close(zz, zz_expected, 0.0));

    // sigma_y (x) sigma_y is the antidiagonal (-1, 1, 1, -1)
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    const ComplexMatrix yy_expected =
        ComplexMatrix::from_rows(4, {0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
    CHECK(matrices_close(yy, yy_expected, 0.0));
}

TEST_CASE("kron is bilinear and respects the mixed product") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = testsupport::random_matrix(rng, 2);
        const ComplexMatrix b = testsupport::random_matrix(rng, 2);
        const ComplexMatrix c = testsupport::random_matrix(rng, 2);
        const ComplexMatrix d = testsupport::random_matrix(rng, 2);

        CHECK(matrices_close(kron(a + b, c), kron(a, c) + kron(b, c), 1e-12));
        CHECK(matrices_close(kron(a, c + d), kron(a, c) + kron(a, d), 1e-12));
        CHECK(matrices_close(kron(a, b) * kron(c, d), kron(a * c, b * d), 1e-12));
    }
}

TEST_CASE("elementary matrix operations") {
    CHECK(trace(ComplexMatrix::identity(4)) == Complex{4.0, 0.0});
    CHECK(matrices_close(pauli_y() * pauli_y(), ComplexMatrix::identity(2), 0.0));

    std::mt19937 rng(99);
    const ComplexMatrix m = testsupport::random_matrix(rng, 4);
    CHECK(matrices_close(adjoint(adjoint(m)), m, 0.0));

    const ComplexMatrix m2 = testsupport::random_matrix(rng, 3);
    CHECK_THROWS_AS((void)(m + m2), ArgumentError);
    CHECK_THROWS_AS((void)(m * m2), ArgumentError);
}

TEST_CASE("eigenvalues_general on fixed spectra") {
    const ComplexMatrix d =
        ComplexMatrix::from_rows(4, {3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 4, 0, 0, 0, 0, 1});
    auto ev = sorted_real(eigenvalues_general(d));
    CHECK(ev == std::vector<double>{1.0, 1.0, 3.0, 4.0});

    // rotation generator: spectrum {i, -i}
    const ComplexMatrix r = ComplexMatrix::from_rows(2, {0, 1, -1, 0});
    auto evr = eigenvalues_general(r);
    std::sort(evr.begin(), evr.end(),
              [](Complex a, Complex b) { return a.imag() < b.imag(); });
    CHECK(std::abs(evr[0] - Complex{0, -1}) < 1e-14);
    CHECK(std::abs(evr[1] - Complex{0, 1}) < 1e-14);
}

TEST_CASE("eigenvalues_general agrees with the Hermitian route on 1000 random matrices") {
    std::mt19937 rng(20240211);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const ComplexMatrix h = testsupport::random_hermitian(rng, 4);
        const std::vector<double> jac = eigenvalues_hermitian(h);
        std::vector<double> qr = sorted_real(eigenvalues_general(h));
        for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(jac[i] - qr[i]));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("eigenvalue sum equals the trace") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix m = testsupport::random_matrix(rng, 4);
        const auto ev = eigenvalues_general(m);
        Complex sum{0, 0};
        for (const Complex& l : ev) sum += l;
        double scale = 0.0;
        for (const Complex& c : m.data()) scale += std::norm(c);
        scale = std::sqrt(scale);
        CHECK(std::abs(sum - trace(m)) < 1e-9 * scale);
    }
}

TEST_CASE("eigenvalues_general rejects oversized input") {
    CHECK_THROWS_AS(eigenvalues_general(ComplexMatrix(9)), ArgumentError);
}

TEST_CASE("eigenvalues_hermitian on fixed spectra") {
    CHECK(eigenvalues_hermitian(pauli_z()) == std::vector<double>{-1.0, 1.0});

    // Bell projector has spectrum {0, 0, 0, 1}
    const double s = 1.0 / std::sqrt(2.0);
    const DensityMatrix bell = DensityMatrix::pure({s, 0.0, 0.0, s});
    const auto ev = eigenvalues_hermitian(bell.matrix());
    CHECK(std::abs(ev[0]) < 1e-14);
    CHECK(std::abs(ev[1]) < 1e-14);
    CHECK(std::abs(ev[2]) < 1e-14);
    CHECK(std::abs(ev[3] - 1.0) < 1e-14);

    const ComplexMatrix mixed = Complex{0.25, 0.0} * ComplexMatrix::identity(4);
    CHECK(eigenvalues_hermitian(mixed) == std::vector<double>{0.25, 0.25, 0.25, 0.25});
}

TEST_CASE("eigenvalues_hermitian rejects non-Hermitian input") {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 1) = Complex{0.5, 0.0}; // m(1,0) stays 0
    CHECK_THROWS_AS(eigenvalues_hermitian(m), ArgumentError);
}

TEST_CASE("DensityMatrix validation") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK_NOTHROW(DensityMatrix::checked(DensityMatrix::pure({s, 0.0, 0.0, s}).matrix()));

    ComplexMatrix bad_trace = Complex{0.5, 0.0} * ComplexMatrix::identity(4);
    CHECK_THROWS_AS(DensityMatrix::checked(bad_trace), ArgumentError);

    ComplexMatrix bad_herm = Complex{0.25, 0.0} * ComplexMatrix::identity(4);
    bad_herm(0, 1) = Complex{0.1, 0.0};
    CHECK_THROWS_AS(DensityMatrix::checked(bad_herm), ArgumentError);

    ComplexMatrix bad_pos(2);
    bad_pos(0, 0) = 1.5;
    bad_pos(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix::checked(bad_pos), ArgumentError);

    CHECK_THROWS_AS(DensityMatrix::pure({0.5, 0.5}), ArgumentError);
}
