#pragma once

#include <cstdint>
#include <vector>

#include "tpsas/rng.hpp"

namespace tpsas {

/// Location mu, scale sigma > 0, skewness lambda, tail weight delta > 0.
struct SsSasParams {
    double mu = 0.0;
    double sigma = 1.0;
    double lambda = 0.0;
    double delta = 1.0;
};

/// Skew-symmetric sinh-arcsinh distribution
///   (2/sigma) f0((x-mu)/sigma; delta) F0(lambda (x-mu)/sigma; delta).
/// With delta = 1 this is the Azzalini skew-normal 2 phi(z) Phi(lambda z).
/// No closed-form cdf exists; cdf values come from adaptive quadrature and
/// quantiles from a bracketed search on that cdf.
class SsSasDistribution {
public:
    explicit SsSasDistribution(SsSasParams p);

    double pdf(double x) const;
    double log_pdf(double x) const;

    /// Quadrature cdf; abs_tol is the integration tolerance.
    double cdf(double x, double abs_tol = 1e-9) const;

    /// Numeric inversion of the quadrature cdf; the bracket grows
    /// geometrically from mu +- sigma until it straddles u.
    /// Satisfies |cdf(result) - u| <= 1e-8.
    double quantile(double u) const;

    /// Exact sign-flip sampler: draw Z from the symmetric family, keep the
    /// sign with probability F0(lambda Z; delta), flip it otherwise.
    std::vector<double> sample(std::size_t n, RngStream& rng) const;
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    const SsSasParams& params() const { return params_; }

private:
    SsSasParams params_;
};

} // namespace tpsas
