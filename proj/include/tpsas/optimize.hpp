#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tpsas {

struct OptimizerSettings {
    int max_iterations = 2000; // per restart round
    double x_tolerance = 1e-8;
    double f_tolerance = 1e-10;
    int restarts = 2; // additional rounds from the perturbed best point
};

struct MinimizeResult {
    std::vector<double> argmin;
    double min_value = 0.0;
    bool converged = false;
    int iterations = 0;
    long evaluations = 0;
};

/// Derivative-free Nelder-Mead simplex descent with deterministic restarts.
/// Each restart rebuilds a smaller simplex around the best point found so
/// far; convergence means the final round's simplex collapsed within the
/// tolerances. The returned value never exceeds f(start).
MinimizeResult minimize(const std::function<double(std::span<const double>)>& f,
                        std::span<const double> start,
                        const OptimizerSettings& settings = {});

} // namespace tpsas
