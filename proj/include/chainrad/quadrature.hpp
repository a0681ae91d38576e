#pragma once

#include <cstddef>
#include <functional>

namespace chainrad::quadrature {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    /// Initial number of equal panels; pick it from the integrand's oscillation scale.
    std::size_t initial_panels = 1;
    std::size_t max_panels = 4096;
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels = 0;
    std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi].
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Throws AccuracyError
/// when max_panels is reached first.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opts = {});

}  // namespace chainrad::quadrature
