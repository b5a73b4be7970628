#pragma once

namespace tpsas {

/// Standard normal density (2*pi)^(-1/2) * exp(-z^2/2).
double std_normal_pdf(double z);

/// log of std_normal_pdf, stable for large |z|.
double std_normal_log_pdf(double z);

/// Standard normal distribution function. Accepts +-infinity.
/// Absolute error below 1e-15 on |z| <= 8.
double std_normal_cdf(double z);

/// log(Phi(z)), usable deep in the lower tail where Phi underflows.
double std_normal_log_cdf(double z);

/// Inverse of std_normal_cdf. Throws std::domain_error for u outside (0,1).
double std_normal_quantile(double u);

} // namespace tpsas
