// random_states.hpp — Seeded random states and matrices for property tests

#pragma once

#include <array>
#include <cmath>
#include <random>

#include "dephasim/complex_matrix.hpp"
#include "dephasim/twoqubit.hpp"

namespace testsupport {

inline std::array<dephasim::Complex, 4> random_amplitudes(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<dephasim::Complex, 4> a;
    double norm2 = 0.0;
    for (auto& c : a) {
        c = dephasim::Complex{gauss(rng), gauss(rng)};
        norm2 += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : a) c *= inv;
    return a;
}

inline dephasim::twoqubit::PureStateAmplitudes random_pure_state(std::mt19937& rng) {
    return dephasim::twoqubit::PureStateAmplitudes(random_amplitudes(rng));
}

inline dephasim::ComplexMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    dephasim::ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dephasim::Complex{gauss(rng), gauss(rng)};
    return m;
}

inline dephasim::ComplexMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
    dephasim::ComplexMatrix m = random_matrix(rng, n);
    return 0.5 * (m + dephasim::adjoint(m));
}

} // namespace testsupport
