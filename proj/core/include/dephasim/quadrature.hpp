// quadrature.hpp — Adaptive Gauss-Kronrod integration on a finite interval

#pragma once

#include <functional>

namespace dephasim {

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-15;
    int max_intervals = 200000;
};

/// Integrate f over [a, b] with adaptive G7/K15 bisection. Throws
/// QuadratureError (carrying the achieved residual) if the interval budget is
/// exhausted before the error estimate meets max(abs_tol, rel_tol * |result|).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts = {});

} // namespace dephasim
