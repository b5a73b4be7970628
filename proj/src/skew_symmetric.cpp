#include "tpsas/skew_symmetric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tpsas/quadrature.hpp"
#include "tpsas/roots.hpp"
#include "tpsas/sas.hpp"

namespace tpsas {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
}

SsSasDistribution::SsSasDistribution(SsSasParams p) : params_(p) {
    if (!(p.sigma > 0.0)) throw std::domain_error("sssas: sigma must be > 0");
    if (!(p.delta > 0.0)) throw std::domain_error("sssas: delta must be > 0");
}

double SsSasDistribution::pdf(double x) const {
    return std::exp(log_pdf(x));
}

double SsSasDistribution::log_pdf(double x) const {
    const double z = (x - params_.mu) / params_.sigma;
    double lp = kLn2 - std::log(params_.sigma) +
                symmetric_sas_log_pdf(z, {params_.delta}) +
                symmetric_sas_log_cdf(params_.lambda * z, {params_.delta});
    if (!(lp > kLogDensityFloor)) lp = kLogDensityFloor;
    return lp;
}

double SsSasDistribution::cdf(double x, double abs_tol) const {
    const double inf = std::numeric_limits<double>::infinity();
    auto f = [this](double t) { return pdf(t); };
    // Integrate the smaller side for speed and accuracy.
    if (x <= params_.mu) return integrate(f, -inf, x, abs_tol).value;
    return 1.0 - integrate(f, x, inf, abs_tol).value;
}

double SsSasDistribution::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("sssas_quantile: u must lie in (0,1)");
    const double mu = params_.mu, sigma = params_.sigma;

    double lo, hi;
    if (cdf(mu) >= u) {
        hi = mu;
        lo = grow_until([&](double x) { return cdf(x) <= u; }, mu, sigma, false);
    } else {
        lo = mu;
        hi = grow_until([&](double x) { return cdf(x) >= u; }, mu, sigma, true);
    }
    return find_root([&](double t) { return cdf(t) - u; }, {lo, hi}, 1e-11 * sigma);
}

std::vector<double> SsSasDistribution::sample(std::size_t n, RngStream& rng) const {
    std::vector<double> out(n);
    const SymmetricSasParams f0{params_.delta};
    for (double& x : out) {
        const double z = symmetric_sas_quantile(rng.next_unit(), f0);
        const double keep = symmetric_sas_cdf(params_.lambda * z, f0);
        const double flip = rng.next_unit();
        x = params_.mu + params_.sigma * (flip <= keep ? z : -z);
    }
    return out;
}

std::vector<double> SsSasDistribution::sample(std::size_t n, std::uint64_t seed) const {
    RngStream rng(seed);
    return sample(n, rng);
}

} // namespace tpsas
