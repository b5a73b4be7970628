#include "tpsas/two_piece.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tpsas/quadrature.hpp"

namespace tpsas {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

struct SideScales {
    double left;  // sigma * b(gamma)
    double right; // sigma * a(gamma)
};

SideScales side_scales(const TpSasParams& p) {
    switch (p.parameterisation) {
    case Parameterisation::EpsilonSkew:
        if (!(p.sigma > 0.0))
            throw std::domain_error("tpsas: sigma must be > 0");
        if (!(p.gamma > -1.0 && p.gamma < 1.0))
            throw std::domain_error("tpsas: epsilon-skew gamma must lie in (-1,1)");
        return {p.sigma * (1.0 + p.gamma), p.sigma * (1.0 - p.gamma)};
    case Parameterisation::InverseScaleFactors:
        if (!(p.sigma > 0.0))
            throw std::domain_error("tpsas: sigma must be > 0");
        if (!(p.gamma > 0.0))
            throw std::domain_error("tpsas: inverse-scale-factors gamma must be > 0");
        return {p.sigma * p.gamma, p.sigma / p.gamma};
    case Parameterisation::TwoSigma:
        if (!(p.sigma > 0.0) || !(p.gamma > 0.0))
            throw std::domain_error("tpsas: both side scales must be > 0");
        return {p.sigma, p.gamma};
    }
    throw std::logic_error("tpsas: unknown parameterisation");
}

} // namespace

TpSasParams reparameterise(const TpSasParams& p, Parameterisation target) {
    const SideScales s = side_scales(p);
    TpSasParams out;
    out.mu = p.mu;
    out.delta = p.delta;
    out.parameterisation = target;
    switch (target) {
    case Parameterisation::EpsilonSkew:
        out.sigma = 0.5 * (s.left + s.right);
        out.gamma = (s.left - s.right) / (s.left + s.right);
        break;
    case Parameterisation::InverseScaleFactors:
        out.sigma = std::sqrt(s.left * s.right);
        out.gamma = std::sqrt(s.left / s.right);
        break;
    case Parameterisation::TwoSigma:
        out.sigma = s.left;
        out.gamma = s.right;
        break;
    }
    return out;
}

TpSasDistribution::TpSasDistribution(TpSasParams p) {
    if (!(p.delta > 0.0)) throw std::domain_error("tpsas: delta must be > 0");
    const SideScales s = side_scales(p);
    mu_ = p.mu;
    delta_ = p.delta;
    scale_left_ = s.left;
    scale_right_ = s.right;
    log_norm_ = kLn2 - std::log(scale_left_ + scale_right_);
}

double TpSasDistribution::pdf(double x) const {
    return std::exp(log_pdf(x));
}

double TpSasDistribution::log_pdf(double x) const {
    // At x == mu both branches agree; the right one is used by convention.
    const double scale = (x < mu_) ? scale_left_ : scale_right_;
    double lp = symmetric_sas_log_pdf((x - mu_) / scale, {delta_}) + log_norm_;
    if (!(lp > kLogDensityFloor)) lp = kLogDensityFloor;
    return lp;
}

double TpSasDistribution::cdf(double x) const {
    const double total = scale_left_ + scale_right_;
    if (x < mu_) {
        return 2.0 * scale_left_ / total *
               symmetric_sas_cdf((x - mu_) / scale_left_, {delta_});
    }
    return (scale_left_ - scale_right_) / total +
           2.0 * scale_right_ / total *
               symmetric_sas_cdf((x - mu_) / scale_right_, {delta_});
}

double TpSasDistribution::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("tpsas_quantile: u must lie in (0,1)");
    const double total = scale_left_ + scale_right_;
    const double at_mode = scale_left_ / total; // cdf value at the mode
    if (u < at_mode) {
        return mu_ + scale_left_ *
                         symmetric_sas_quantile(0.5 * u / at_mode, {delta_});
    }
    const double v = 0.5 * (u - 2.0 * at_mode + 1.0) / (1.0 - at_mode);
    return mu_ + scale_right_ * symmetric_sas_quantile(v, {delta_});
}

std::vector<double> TpSasDistribution::sample(std::size_t n, RngStream& rng) const {
    std::vector<double> out(n);
    for (double& x : out) x = quantile(rng.next_unit());
    return out;
}

std::vector<double> TpSasDistribution::sample(std::size_t n, std::uint64_t seed) const {
    RngStream rng(seed);
    return sample(n, rng);
}

double TpSasDistribution::moment(int k, double abs_tol) const {
    if (k < 1) throw std::domain_error("tpsas_moment: k must be >= 1");
    const double inf = std::numeric_limits<double>::infinity();
    auto integrand = [this, k](double x) { return std::pow(x, k) * pdf(x); };
    // Split at the mode so the density kink sits on a segment boundary.
    const QuadratureResult lo = integrate(integrand, -inf, mu_, 0.5 * abs_tol);
    const QuadratureResult hi = integrate(integrand, mu_, inf, 0.5 * abs_tol);
    return lo.value + hi.value;
}

TpSasParams TpSasDistribution::params(Parameterisation target) const {
    TpSasParams two_sigma;
    two_sigma.mu = mu_;
    two_sigma.sigma = scale_left_;
    two_sigma.gamma = scale_right_;
    two_sigma.delta = delta_;
    two_sigma.parameterisation = Parameterisation::TwoSigma;
    return reparameterise(two_sigma, target);
}

} // namespace tpsas
