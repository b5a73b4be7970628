#include "tpsas/asymmetry.hpp"

#include <algorithm>
#include <cmath>

namespace tpsas {

namespace {

constexpr int kScanPoints = 2001;
constexpr double kModeTolerance = 1e-8;
constexpr double kRootTolerance = 1e-10;

double golden_max(const std::function<double(double)>& f, double a, double b, double x_tol) {
    constexpr double kInvPhi = 0.61803398874989484820;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    // The iteration cap guards against stalling at floating-point resolution
    // when the bracket endpoints are of large magnitude.
    for (int it = 0; it < 240 && b - a > x_tol; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double find_mode(const UnimodalDensity& d) {
    if (d.known_mode) return *d.known_mode;

    const double lo = d.search_interval.lo, hi = d.search_interval.hi;
    std::vector<double> xs(kScanPoints), fs(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) {
        xs[i] = lo + (hi - lo) * i / (kScanPoints - 1);
        fs[i] = d.pdf(xs[i]);
    }

    int n_maxima = 0;
    for (int i = 0; i < kScanPoints; ++i) {
        const bool up = (i == 0) || fs[i] > fs[i - 1];
        const bool down = (i == kScanPoints - 1) || fs[i] > fs[i + 1];
        if (up && down) ++n_maxima;
    }
    if (n_maxima > 1)
        throw MultiModalError("find_mode: grid pre-scan found multiple strict local maxima");

    // Leftmost grid maximizer; the true mode lies within one cell of it.
    const int winner =
        static_cast<int>(std::max_element(fs.begin(), fs.end()) - fs.begin());
    const double a = xs[std::max(0, winner - 1)];
    const double b = xs[std::min(kScanPoints - 1, winner + 1)];
    return golden_max(d.pdf, a, b, kModeTolerance);
}

double ag_measure(const UnimodalDensity& d) {
    return 1.0 - 2.0 * d.cdf(find_mode(d));
}

namespace {

double cj_at(const UnimodalDensity& d, double p, double mode, double f_mode) {
    const double target = p * f_mode;
    const double w0 = (d.search_interval.hi - d.search_interval.lo) / 40.0;

    auto below = [&](double x) { return d.pdf(x) < target; };
    const double right_out = grow_until(below, mode, w0, true);
    const double left_out = grow_until(below, mode, w0, false);

    auto level = [&](double x) { return d.pdf(x) - target; };
    const double x_right = find_root(level, {mode, right_out}, kRootTolerance);
    const double x_left = find_root(level, {left_out, mode}, kRootTolerance);
    return (x_right - 2.0 * mode + x_left) / (x_right - x_left);
}

} // namespace

double cj_functional(const UnimodalDensity& d, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("cj_functional: p must lie in (0,1)");
    const double mode = find_mode(d);
    return cj_at(d, p, mode, d.pdf(mode));
}

CjCurve cj_curve(const UnimodalDensity& d, std::span<const double> p_grid) {
    const double mode = find_mode(d);
    const double f_mode = d.pdf(mode);
    CjCurve out;
    out.p_grid.assign(p_grid.begin(), p_grid.end());
    out.cj_values.reserve(p_grid.size());
    for (double p : p_grid) {
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("cj_curve: p values must lie in (0,1)");
        out.cj_values.push_back(cj_at(d, p, mode, f_mode));
    }
    return out;
}

UnimodalDensity make_unimodal(const SasDistribution& d) {
    // Any stationary point of the log-density satisfies
    // |sinh(2w)/2 - tanh(w)| <= 1/delta in w = delta*arcsinh(z) - epsilon,
    // so the mode is confined to |w| <= asinh(2 + 2/delta)/2; widen by one
    // unit of w for slack and map back to x.
    const SasParams& p = d.params();
    const double w_max = 0.5 * std::asinh(2.0 + 2.0 / p.delta) + 1.0;
    const double lo = p.mu + p.sigma * std::sinh((p.epsilon - w_max) / p.delta);
    const double hi = p.mu + p.sigma * std::sinh((p.epsilon + w_max) / p.delta);
    return {[d](double x) { return d.pdf(x); },
            [d](double x) { return d.cdf(x); },
            {lo, hi},
            std::nullopt};
}

UnimodalDensity make_unimodal(const TpSasDistribution& d) {
    const double span = 20.0 * std::max(d.scale_left(), d.scale_right());
    return {[d](double x) { return d.pdf(x); },
            [d](double x) { return d.cdf(x); },
            {d.mode() - span, d.mode() + span},
            d.mode()};
}

UnimodalDensity make_unimodal(const SsSasDistribution& d) {
    // The density is the symmetric one damped by a factor in [0,1], so the
    // mode lies where the symmetric factor is non-negligible.
    const SsSasParams& p = d.params();
    const double half =
        p.sigma * symmetric_sas_quantile(1.0 - 1e-12, SymmetricSasParams{p.delta});
    return {[d](double x) { return d.pdf(x); },
            [d](double x) { return d.cdf(x); },
            {p.mu - half, p.mu + half},
            std::nullopt};
}

} // namespace tpsas
