// errors.hpp — Exception hierarchy shared by all dephasim components

#pragma once

#include <stdexcept>
#include <string>

namespace dephasim {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or violated precondition (caller bug / bad input).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// Requested operation is outside the domain where it is defined
/// (e.g. Markov limit of a discrete bath, closed-form propagation with kappa != 0).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

/// A numerical procedure failed to reach its accuracy contract.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// Adaptive quadrature exhausted its refinement budget; carries the residual
/// error estimate that was actually achieved.
class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& what, double achieved_residual)
        : NumericalError(what), residual(achieved_residual) {}
    double residual;
};

/// Eigenvalue iteration did not converge within the iteration cap.
class EigenConvergenceError : public NumericalError {
public:
    EigenConvergenceError(const std::string& what, int iteration_count)
        : NumericalError(what), iterations(iteration_count) {}
    int iterations;
};

/// Time integration became unstable; carries the time at which the failure
/// was detected.
class IntegrationError : public NumericalError {
public:
    IntegrationError(const std::string& what, double failure_time)
        : NumericalError(what), time(failure_time) {}
    double time;
};

} // namespace dephasim
