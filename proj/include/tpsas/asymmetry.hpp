#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tpsas/roots.hpp"
#include "tpsas/sas.hpp"
#include "tpsas/skew_symmetric.hpp"
#include "tpsas/two_piece.hpp"

namespace tpsas {

/// A density/cdf pair assumed unimodal on search_interval. When the mode is
/// known analytically (two-piece case) it short-circuits the search.
struct UnimodalDensity {
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    Interval search_interval;
    std::optional<double> known_mode;
};

/// Asymmetry functional sampled on a probability grid.
struct CjCurve {
    std::vector<double> p_grid;
    std::vector<double> cj_values;
};

class MultiModalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Maximizer of the density: 2001-point grid pre-scan (erroring out if the
/// scan sees several strict local maxima) refined by golden-section to an
/// absolute x-tolerance of 1e-8. Ties resolve to the leftmost maximizer.
double find_mode(const UnimodalDensity& d);

/// Mass right of the mode minus mass left of it: 1 - 2*cdf(mode), in (-1,1).
double ag_measure(const UnimodalDensity& d);

/// Level-p asymmetry: with x_L < mode < x_R the two points where the density
/// equals p times its modal value, returns
/// (x_R - 2*mode + x_L) / (x_R - x_L).
double cj_functional(const UnimodalDensity& d, double p);

/// cj_functional over a grid of levels.
CjCurve cj_curve(const UnimodalDensity& d, std::span<const double> p_grid);

/// Wrappers binding each family's pdf/cdf and a search interval wide enough
/// to contain the mode even under extreme skewness.
UnimodalDensity make_unimodal(const SasDistribution& d);
UnimodalDensity make_unimodal(const TpSasDistribution& d);
UnimodalDensity make_unimodal(const SsSasDistribution& d);

} // namespace tpsas
