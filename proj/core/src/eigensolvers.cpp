#include "dephasim/eigensolvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dephasim/errors.hpp"

namespace dephasim {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (const Complex& c : m.data()) s += std::norm(c);
    return std::sqrt(s);
}

double off_diagonal_norm(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// Unitary Givens pair (c real, s complex) with
//   [c, s; -conj(s), c] * [f; g] = [r; 0].
struct Givens {
    double c;
    Complex s;
};

Givens make_givens(Complex f, Complex g) {
    const double af = std::abs(f), ag = std::abs(g);
    if (ag == 0.0) return {1.0, Complex{0.0, 0.0}};
    if (af == 0.0) return {0.0, std::conj(g) / ag};
    const double d = std::hypot(af, ag);
    const Complex phase = f / af;
    return {af / d, phase * std::conj(g) / d};
}

// Roots of the 2x2 block [[a, b], [c, d]].
std::pair<Complex, Complex> eig2(Complex a, Complex b, Complex c, Complex d) {
    const Complex tr = a + d;
    const Complex disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

// In-place reduction to upper Hessenberg form by Householder reflections.
void hessenberg(ComplexMatrix& h) {
    const std::size_t n = h.dim();
    if (n < 3) return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) colnorm += std::norm(h(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;

        // v = x + e^{i arg(x0)} |x| e1, normalized reflector
        std::vector<Complex> v(n - k - 1);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = h(k + 1 + i, k);
        const double a0 = std::abs(v[0]);
        const Complex phase = (a0 == 0.0) ? Complex{1.0, 0.0} : v[0] / a0;
        v[0] += phase * colnorm;
        double vnorm2 = 0.0;
        for (const Complex& c : v) vnorm2 += std::norm(c);
        if (vnorm2 == 0.0) continue;

        // rows from the left: H <- (I - 2 v v^dag / v^dag v) H
        for (std::size_t j = k; j < n; ++j) {
            Complex dot{0.0, 0.0};
            for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(v[i]) * h(k + 1 + i, j);
            dot *= 2.0 / vnorm2;
            for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= dot * v[i];
        }
        // columns from the right: H <- H (I - 2 v v^dag / v^dag v)
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot{0.0, 0.0};
            for (std::size_t j = 0; j < v.size(); ++j) dot += h(i, k + 1 + j) * v[j];
            dot *= 2.0 / vnorm2;
            for (std::size_t j = 0; j < v.size(); ++j) h(i, k + 1 + j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex{0.0, 0.0};
    }
}

} // namespace

std::vector<Complex> eigenvalues_general(const ComplexMatrix& m, const Tolerances& tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw ArgumentError("eigenvalues_general: empty matrix");
    if (n > 8) throw ArgumentError("eigenvalues_general: dimension " + std::to_string(n) + " exceeds cap 8");
    if (!m.all_finite()) throw ArgumentError("eigenvalues_general: non-finite entries");

    if (n == 1) return {m(0, 0)};

    ComplexMatrix h = m;
    hessenberg(h);
    const double scale = std::max(frobenius(h), std::numeric_limits<double>::min());

    std::vector<Complex> eig;
    eig.reserve(n);

    auto subdiag_small = [&](std::size_t i) {
        double small = tol.qr_deflation_rel * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
        if (small == 0.0) small = kEps * scale;
        return std::abs(h(i, i - 1)) <= small;
    };

    std::size_t hi = n - 1;
    int iters_since_deflation = 0;
    int total_iterations = 0;
    const int cap = tol.qr_max_iterations_per_eigenvalue * static_cast<int>(n);

    while (true) {
        // peel off converged trailing eigenvalues
        while (hi > 0 && subdiag_small(hi)) {
            eig.push_back(h(hi, hi));
            --hi;
            iters_since_deflation = 0;
        }
        if (hi == 0) {
            eig.push_back(h(0, 0));
            break;
        }

        // active block [lo, hi]
        std::size_t lo = hi;
        while (lo > 0 && !subdiag_small(lo)) --lo;

        if (hi - lo == 1) {
            auto [l1, l2] = eig2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
            eig.push_back(l1);
            eig.push_back(l2);
            if (lo == 0) break;
            hi = lo - 1;
            iters_since_deflation = 0;
            continue;
        }

        if (++total_iterations > cap)
            throw EigenConvergenceError("eigenvalues_general: QR iteration did not converge", total_iterations);

        // Wilkinson shift from the trailing 2x2, with an occasional ad-hoc
        // exceptional shift to break stagnation cycles.
        Complex mu;
        if (++iters_since_deflation % 12 == 0) {
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            auto [l1, l2] = eig2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
        }

        // explicit shifted QR sweep on the active block
        std::vector<Givens> rot(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) h(i, i) -= mu;
        h(hi, hi) -= mu;
        for (std::size_t i = lo; i < hi; ++i) {
            Givens g = make_givens(h(i, i), h(i + 1, i));
            rot[i - lo] = g;
            for (std::size_t j = i; j <= hi; ++j) {
                const Complex a = h(i, j), b = h(i + 1, j);
                h(i, j) = g.c * a + g.s * b;
                h(i + 1, j) = -std::conj(g.s) * a + g.c * b;
            }
        }
        for (std::size_t i = lo; i < hi; ++i) {
            const Givens& g = rot[i - lo];
            const std::size_t jmax = std::min(i + 1, hi);
            for (std::size_t r = lo; r <= jmax; ++r) {
                const Complex a = h(r, i), b = h(r, i + 1);
                h(r, i) = g.c * a + std::conj(g.s) * b;
                h(r, i + 1) = -g.s * a + g.c * b;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
    }

    return eig;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw ArgumentError("eigenvalues_hermitian: empty matrix");
    if (!m.all_finite()) throw ArgumentError("eigenvalues_hermitian: non-finite entries");
    if (hermiticity_defect(m) > tol.hermitian_input)
        throw ArgumentError("eigenvalues_hermitian: input is not Hermitian (defect " +
                            std::to_string(hermiticity_defect(m)) + ")");

    ComplexMatrix a = m;
    // symmetrize away the sub-tolerance defect so rotations stay exact
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex{a(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    const double target = tol.jacobi_off_rel * std::max(frobenius(a), std::numeric_limits<double>::min());
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > tol.jacobi_max_sweeps)
            throw EigenConvergenceError("eigenvalues_hermitian: Jacobi sweeps exhausted", sweep);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double aa = std::abs(apq);
                if (aa == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / aa;

                const double tau = (aqq - app) / (2.0 * aa);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = (t * c) * phase;

                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(s) * aiq;
                    a(i, q) = s * aip + c * aiq;
                    a(p, i) = std::conj(a(i, p));
                    a(q, i) = std::conj(a(i, q));
                }
                a(p, p) = Complex{app - t * aa, 0.0};
                a(q, q) = Complex{aqq + t * aa, 0.0};
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
            }
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace dephasim
