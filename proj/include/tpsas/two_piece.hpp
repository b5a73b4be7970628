#pragma once

#include <cstdint>
#include <vector>

#include "tpsas/rng.hpp"
#include "tpsas/sas.hpp"

namespace tpsas {

/// How the two half-density scale factors {a(gamma), b(gamma)} are encoded.
///   EpsilonSkew:         a = 1 - gamma, b = 1 + gamma, gamma in (-1, 1)
///   InverseScaleFactors: a = 1/gamma,   b = gamma,     gamma > 0
///   TwoSigma:            the two side scales given directly
enum class Parameterisation { EpsilonSkew, InverseScaleFactors, TwoSigma };

/// Mode mu, scale sigma > 0, skewness gamma (domain set by the
/// parameterisation), tail weight delta > 0. Under TwoSigma the pair
/// (sigma, gamma) carries (sigma_left, sigma_right) directly and the
/// epsilon-skew convention sigma = (sigma_left + sigma_right)/2 fixes the
/// conversion back to the other forms.
struct TpSasParams {
    double mu = 0.0;
    double sigma = 1.0;
    double gamma = 0.0;
    double delta = 1.0;
    Parameterisation parameterisation = Parameterisation::EpsilonSkew;
};

/// Express the same distribution in another parameterisation.
TpSasParams reparameterise(const TpSasParams& p, Parameterisation target);

/// Two-piece sinh-arcsinh distribution: two symmetric SAS half-densities
/// joined at the mode mu with different scales on each side, so the shape is
/// asymmetric in the body while both tails decay alike.
class TpSasDistribution {
public:
    explicit TpSasDistribution(TpSasParams p);

    double pdf(double x) const;
    double log_pdf(double x) const;
    double cdf(double x) const;
    /// Piecewise closed-form inversion of the cdf.
    double quantile(double u) const;

    std::vector<double> sample(std::size_t n, RngStream& rng) const;
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    /// k-th raw moment by quadrature (finite for every parameter choice).
    double moment(int k, double abs_tol = 1e-8) const;

    /// Parameters in the requested parameterisation.
    TpSasParams params(Parameterisation target = Parameterisation::EpsilonSkew) const;

    double mode() const { return mu_; }
    double scale_left() const { return scale_left_; }
    double scale_right() const { return scale_right_; }
    double tail_weight() const { return delta_; }

private:
    double mu_;
    double delta_;
    double scale_left_;  // sigma * b(gamma), used for x < mu
    double scale_right_; // sigma * a(gamma), used for x >= mu
    double log_norm_;    // log(2 / (scale_left + scale_right))
};

} // namespace tpsas
