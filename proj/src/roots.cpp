#include "tpsas/roots.hpp"

#include <cmath>

namespace tpsas {

double find_root(const std::function<double(double)>& f, Interval bracket, double x_tol) {
    double a = bracket.lo, b = bracket.hi;
    if (!(a < b)) throw BracketError("find_root: bracket must have lo < hi");
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw BracketError("find_root: f has equal signs at bracket endpoints");

    bool force_bisect = false;
    while (b - a > x_tol) {
        double width = b - a;
        double x;
        if (force_bisect) {
            x = a + 0.5 * width;
        } else {
            x = b - fb * (b - a) / (fb - fa); // secant through the bracket
            const double margin = 0.01 * width;
            if (!(x > a + margin && x < b - margin)) x = a + 0.5 * width;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(fa)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        // If the secant step barely shrank the bracket, bisect next round.
        force_bisect = (b - a) > 0.6 * width;
    }
    return 0.5 * (a + b);
}

double grow_until(const std::function<bool(double)>& stop, double origin,
                  double initial_width, bool upward, int max_doublings) {
    double w = initial_width;
    for (int k = 0; k <= max_doublings; ++k) {
        const double x = upward ? origin + w : origin - w;
        if (stop(x)) return x;
        w *= 2.0;
    }
    throw BracketError("grow_until: predicate not satisfied within growth cap");
}

} // namespace tpsas
