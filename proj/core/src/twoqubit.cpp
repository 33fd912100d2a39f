#include "dephasim/twoqubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dephasim/errors.hpp"

namespace dephasim::twoqubit {

namespace {

const ComplexMatrix& spin_flip_matrix() {
    static const ComplexMatrix syy = kron(pauli_y(), pauli_y());
    return syy;
}

double frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (const Complex& c : m.data()) s += std::norm(c);
    return std::sqrt(s);
}

} // namespace

PureStateAmplitudes::PureStateAmplitudes(std::array<Complex, 4> a) : a_(a) {
    double norm2 = 0.0;
    for (const Complex& c : a_) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw ArgumentError("PureStateAmplitudes: not normalized (|a|^2 = " + std::to_string(norm2) + ")");
}

DensityMatrix PureStateAmplitudes::projector() const {
    return DensityMatrix::pure({a_[0], a_[1], a_[2], a_[3]});
}

const char* to_string(StateKind k) {
    switch (k) {
        case StateKind::Separable: return "Separable";
        case StateKind::Robust: return "Robust";
        case StateKind::Fragile: return "Fragile";
        case StateKind::Generic: return "Generic";
    }
    return "?";
}

dynamics::CommutingModel build_model(const TwoQubitParams& p) {
    if (!std::isfinite(p.omega_a) || !std::isfinite(p.omega_b) || !std::isfinite(p.j))
        throw ArgumentError("build_model: parameters must be finite");

    dynamics::CommutingModel m;
    m.dim = 4;
    m.energies = {p.omega_a + p.omega_b + p.j, p.omega_a - p.omega_b - p.j,
                  -p.omega_a + p.omega_b - p.j, -p.omega_a - p.omega_b + p.j};
    m.couplings = {2.0, 0.0, 0.0, -2.0};

    const ComplexMatrix sz = pauli_z();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    m.h = p.omega_a * kron(sz, id) + p.omega_b * kron(id, sz) + p.j * kron(sz, sz);
    m.l = kron(sz, id) + kron(id, sz);
    return m;
}

double concurrence(const DensityMatrix& rho, const Tolerances& tol) {
    if (rho.dim() != 4) throw ArgumentError("concurrence: state must be 4x4");

    const ComplexMatrix& syy = spin_flip_matrix();
    ComplexMatrix conj_rho(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) conj_rho(i, j) = std::conj(rho(i, j));
    const ComplexMatrix product = rho.matrix() * (syy * conj_rho * syy);

    const std::vector<Complex> lam = eigenvalues_general(product, tol);

    const double zero_floor = tol.concurrence_zero_eps_factor *
                              std::numeric_limits<double>::epsilon() * frobenius(product);
    std::array<double, 4> roots{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(lam[i].imag()) > tol.concurrence_imag)
            throw NumericalError("concurrence: eigenvalue imaginary part " +
                                 std::to_string(lam[i].imag()) + " exceeds tolerance; input is malformed");
        const double re = lam[i].real();
        roots[i] = (re <= zero_floor) ? 0.0 : std::sqrt(re);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double pure_concurrence(const PureStateAmplitudes& a) {
    return 2.0 * std::abs(a[1] * a[2] - a[0] * a[3]);
}

ComplexMatrix reduce_a(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw ArgumentError("reduce_a: state must be 4x4");
    ComplexMatrix r(2);
    r(0, 0) = rho(0, 0) + rho(1, 1);
    r(1, 1) = rho(2, 2) + rho(3, 3);
    r(0, 1) = rho(0, 2) + rho(1, 3);
    r(1, 0) = std::conj(r(0, 1));
    return r;
}

ComplexMatrix reduce_b(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw ArgumentError("reduce_b: state must be 4x4");
    ComplexMatrix r(2);
    r(0, 0) = rho(0, 0) + rho(2, 2);
    r(1, 1) = rho(1, 1) + rho(3, 3);
    r(0, 1) = rho(0, 1) + rho(2, 3);
    r(1, 0) = std::conj(r(0, 1));
    return r;
}

StateClass classify(const PureStateAmplitudes& a, double tol) {
    const double a23 = std::abs(a[1] * a[2]);
    const double a14 = std::abs(a[0] * a[3]);
    const double c_inf = 2.0 * std::max(0.0, a23 - a14);

    if (std::abs(a[1] * a[2] - a[0] * a[3]) <= tol) return {StateKind::Separable, c_inf};
    if ((std::abs(a[0]) <= tol || std::abs(a[3]) <= tol) && a23 > tol)
        return {StateKind::Robust, c_inf};
    if ((std::abs(a[1]) <= tol || std::abs(a[2]) <= tol) && a14 > tol)
        return {StateKind::Fragile, c_inf};
    return {StateKind::Generic, c_inf};
}

TimeScales time_scales(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw ArgumentError("time_scales: Gamma must be finite and > 0");
    return {1.0 / (16.0 * gamma), 1.0 / (4.0 * gamma), gamma};
}

double fragile_concurrence_analytic(Complex a1, Complex a4, double d_t) {
    return 2.0 * std::abs(a1 * a4) * std::exp(-16.0 * d_t);
}

double coherence_a(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw ArgumentError("coherence_a: state must be 4x4");
    return std::abs(rho(0, 2) + rho(1, 3));
}

void attach_observables(dynamics::Trajectory& traj, const Tolerances& tol) {
    traj.concurrence.clear();
    traj.coherence_a.clear();
    traj.concurrence.reserve(traj.states.size());
    traj.coherence_a.reserve(traj.states.size());
    for (const DensityMatrix& s : traj.states) {
        traj.concurrence.push_back(concurrence(s, tol));
        traj.coherence_a.push_back(coherence_a(s));
    }
}

} // namespace dephasim::twoqubit
