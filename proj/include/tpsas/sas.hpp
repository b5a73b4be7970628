#pragma once

#include <cstdint>
#include <vector>

#include "tpsas/rng.hpp"

namespace tpsas {

/// Location mu, scale sigma > 0, skewness epsilon, tail weight delta > 0.
struct SasParams {
    double mu = 0.0;
    double sigma = 1.0;
    double epsilon = 0.0;
    double delta = 1.0;
};

/// Symmetric special case: epsilon = 0, mu = 0, sigma = 1.
struct SymmetricSasParams {
    double delta = 1.0;
};

/// Floor applied to every log-density in the library so likelihood sums stay
/// finite even at absurd trial parameters.
constexpr double kLogDensityFloor = -1e250;

/// Density of the symmetric family f0(x; delta).
double symmetric_sas_pdf(double x, SymmetricSasParams p);
double symmetric_sas_log_pdf(double x, SymmetricSasParams p);
/// Distribution function F0(x; delta).
double symmetric_sas_cdf(double x, SymmetricSasParams p);
double symmetric_sas_log_cdf(double x, SymmetricSasParams p);
/// Quantile of the symmetric family (closed form).
double symmetric_sas_quantile(double u, SymmetricSasParams p);

/// Sinh-arcsinh distribution: the normal distribution pushed through the
/// parametric change of variable sinh(delta*arcsinh((x-mu)/sigma) - epsilon).
class SasDistribution {
public:
    explicit SasDistribution(SasParams p);

    /// The change of variable H(x); strictly increasing in x.
    double transform(double x) const;

    double pdf(double x) const;
    double log_pdf(double x) const;
    double cdf(double x) const;
    /// Closed-form inverse cdf; throws std::domain_error outside (0,1).
    double quantile(double u) const;

    std::vector<double> sample(std::size_t n, RngStream& rng) const;
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    const SasParams& params() const { return params_; }

private:
    SasParams params_;
};

} // namespace tpsas
