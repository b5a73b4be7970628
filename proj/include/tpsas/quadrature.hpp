#pragma once

#include <functional>
#include <stdexcept>

namespace tpsas {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int intervals_used = 0;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_result(best) {}
    QuadratureResult best_result;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b].
/// Either limit may be +-infinity; infinite ranges are mapped onto a finite
/// interval by a rational change of variable before subdivision.
/// Returns the best estimate without checking the tolerance.
QuadratureResult try_integrate(const std::function<double(double)>& f,
                               double a, double b, double abs_tol,
                               int max_intervals = 4000);

/// As try_integrate, but throws QuadratureError when the subdivision budget
/// is exhausted before the requested tolerance is met.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double abs_tol,
                           int max_intervals = 4000);

} // namespace tpsas
