#include "tpsas/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tpsas {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

double simplex_spread(const std::vector<Vertex>& v) {
    double d = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = 0; j < v[0].x.size(); ++j)
            d = std::max(d, std::fabs(v[i].x[j] - v[0].x[j]));
    return d;
}

} // namespace

MinimizeResult minimize(const std::function<double(std::span<const double>)>& f,
                        std::span<const double> start,
                        const OptimizerSettings& settings) {
    const std::size_t n = start.size();
    long evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        const double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    MinimizeResult out;
    out.argmin.assign(start.begin(), start.end());
    out.min_value = eval(out.argmin);
    int total_iterations = 0;
    bool last_round_converged = false;

    for (int round = 0; round <= settings.restarts; ++round) {
        // Fresh full-size simplex around the best point found so far.
        std::vector<Vertex> v(n + 1);
        v[0] = {out.argmin, out.min_value};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> xi = out.argmin;
            xi[i] += std::max(0.1, 0.05 * std::fabs(xi[i]));
            v[i + 1] = {xi, eval(xi)};
        }
        auto by_f = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
        std::sort(v.begin(), v.end(), by_f);

        const double round_start_best = v[0].f;
        last_round_converged = false;
        for (int it = 0; it < settings.max_iterations; ++it, ++total_iterations) {
            const double fspread = v[n].f - v[0].f;
            if (simplex_spread(v) <= settings.x_tolerance &&
                fspread <= settings.f_tolerance * std::max(1.0, std::fabs(v[0].f))) {
                last_round_converged = true;
                break;
            }

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) centroid[j] += v[i].x[j];
            }
            for (double& c : centroid) c /= static_cast<double>(n);

            auto along = [&](double t) {
                std::vector<double> x(n);
                for (std::size_t j = 0; j < n; ++j)
                    x[j] = centroid[j] + t * (centroid[j] - v[n].x[j]);
                return x;
            };

            std::vector<double> xr = along(1.0);
            const double fr = eval(xr);
            if (fr < v[0].f) {
                std::vector<double> xe = along(2.0);
                const double fe = eval(xe);
                if (fe < fr)
                    v[n] = {std::move(xe), fe};
                else
                    v[n] = {std::move(xr), fr};
            } else if (fr < v[n - 1].f) {
                v[n] = {std::move(xr), fr};
            } else {
                const bool outside = fr < v[n].f;
                std::vector<double> xc = along(outside ? 0.5 : -0.5);
                const double fc = eval(xc);
                if (fc < (outside ? fr : v[n].f)) {
                    v[n] = {std::move(xc), fc};
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t j = 0; j < n; ++j)
                            v[i].x[j] = v[0].x[j] + 0.5 * (v[i].x[j] - v[0].x[j]);
                        v[i].f = eval(v[i].x);
                    }
                }
            }
            std::sort(v.begin(), v.end(), by_f);
        }

        if (v[0].f < out.min_value) {
            out.min_value = v[0].f;
            out.argmin = v[0].x;
        }
        // Stop early if a restart no longer improves anything measurable.
        if (round > 0 && last_round_converged &&
            round_start_best - out.min_value <=
                settings.f_tolerance * std::max(1.0, std::fabs(out.min_value)))
            break;
    }

    out.converged = last_round_converged;
    out.iterations = total_iterations;
    out.evaluations = evals;
    return out;
}

} // namespace tpsas
