#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tpsas/rng.hpp"
#include "tpsas/sas.hpp"
#include "tpsas/skew_symmetric.hpp"
#include "tpsas/two_piece.hpp"

namespace tpsas {

enum class ModelFamily { Normal, SkewNormal, Sas, TpSas, SsSas };

/// Identifies a fit family and its free-parameter layout.
struct ModelSpec {
    ModelFamily family = ModelFamily::Normal;

    int n_params() const;
    const char* name() const; // normal, sn, sas, tpsas, sssas
    std::vector<const char*> param_names() const;

    /// Throws std::invalid_argument for unknown names.
    static ModelSpec from_name(const std::string& name);
    static std::vector<ModelSpec> all();
};

struct NormalDist {
    double mu = 0.0;
    double sigma = 1.0;
};

/// A distribution instantiated from (family, natural parameters), exposing
/// the uniform surface fitting and diagnostics need. The skew-normal is the
/// delta = 1 member of the skew-symmetric family.
class Model {
public:
    /// Validates the parameter vector; throws std::domain_error.
    Model(ModelSpec spec, std::vector<double> theta);

    double pdf(double x) const;
    double log_pdf(double x) const;
    double cdf(double x) const;
    double quantile(double u) const;
    std::vector<double> sample(std::size_t n, RngStream& rng) const;
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    const ModelSpec& spec() const { return spec_; }
    const std::vector<double>& theta() const { return theta_; }

private:
    ModelSpec spec_;
    std::vector<double> theta_;
    std::variant<NormalDist, SasDistribution, TpSasDistribution, SsSasDistribution> dist_;
};

} // namespace tpsas
