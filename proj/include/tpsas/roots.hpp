#pragma once

#include <functional>
#include <stdexcept>

namespace tpsas {

/// Closed interval with lo < hi.
struct Interval {
    double lo;
    double hi;
};

class BracketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bracketed root finding: secant steps accelerated inside a maintained
/// sign-change bracket, with bisection as fallback so convergence on
/// monotone functions is guaranteed. Requires f(lo) and f(hi) of opposite
/// sign (throws BracketError otherwise); stops when the bracket width falls
/// below x_tol.
double find_root(const std::function<double(double)>& f, Interval bracket, double x_tol);

/// Expands an interval endpoint geometrically (factor 2) away from `origin`,
/// starting at distance `initial_width`, until `stop(x)` holds. Returns the
/// first x satisfying the predicate. Throws BracketError after `max_doublings`.
double grow_until(const std::function<bool(double)>& stop, double origin,
                  double initial_width, bool upward, int max_doublings = 60);

} // namespace tpsas
