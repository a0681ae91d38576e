#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "chainrad/quadrature.hpp"
#include "chainrad/states.hpp"
#include "chainrad/sweep_table.hpp"

namespace chainrad {

/// Below this argument the bond kernel uses its Taylor polynomial through x^4.
inline constexpr double kKernelTaylorThreshold = 1e-3;
/// Below this argument (and above the Taylor threshold) the bond kernel is
/// summed from its full power series; above it the trigonometric form is used.
inline constexpr double kKernelSeriesThreshold = 1.0;

/// Bond kernel F(x): contribution of one pair at dimensionless separation x
/// to a collective decay rate. Even in x, F(0) = 1 for every phi.
double f_kernel(double x, double phi);

namespace detail {
double f_kernel_direct(double x, double phi);
/// Full power series, summed to double precision.
double f_kernel_series(double x, double phi);
/// Taylor polynomial through x^4.
double f_kernel_taylor(double x, double phi);
/// F(x) - 1 without cancellation against the leading 1.
double f_kernel_deficit(double x, double phi);
}  // namespace detail

enum class DampingMethod { closed_form, quadrature };

std::string_view to_string(DampingMethod m);

struct DampingResult {
    double rate_ratio = 0.0;  // Gamma / Gamma_A
    DampingMethod method = DampingMethod::closed_form;
    SignState state;
    double x = 0.0;
    double phi = 0.0;
};

/// Symmetric-state rate 1 + 2 sum_k (n-k)/n F(k x).
DampingResult damping_symmetric(int n, double x, double phi);

/// Rate of an arbitrary sign state, 1 + (2/N) sum_{n<m} C_n C_m F((m-n) x).
DampingResult damping_general(const SignState& state, double x, double phi);

/// Golden-rule oracle: integrates (3 / 8xN) |sum_n C_n e^{-iny}|^2 times the
/// dipole angular weight over y in [-x, x]. Independent of f_kernel.
/// Throws AccuracyError if the integral does not converge.
DampingResult damping_quadrature_oracle(const SignState& state, double x, double phi,
                                        quadrature::Options opts = {});

/// Rows (N, Gamma_s/Gamma_A per phi) for N = 1..n_max. With `oracle`, each
/// phi also gets a quadrature column and a max_rel_err footer.
SweepTable n_scaling_sweep(int n_max, double x, std::span<const double> phi_list,
                           bool oracle = false);

/// Rows (phi_deg, Gamma_s/Gamma_A) over the given angles (radians).
SweepTable angle_sweep(int n, double x, std::span<const double> phi_grid, bool oracle = false);

/// Rows (x, Gamma/Gamma_A per phi) for one sign state over an x grid.
SweepTable x_sweep(const SignState& state, std::span<const double> x_grid,
                   std::span<const double> phi_list, bool oracle = false);

/// Oracle-vs-closed-form comparison over every sign state of N = 1..n_max
/// on the (x, phi) grid. One row per (N, x, phi) with the worst relative
/// error over all 2^N states; the footer records the global maximum.
SweepTable oracle_equivalence_table(int n_max, std::span<const double> xs,
                                    std::span<const double> phis);

/// Relative difference used by every oracle comparison.
double relative_error(double value, double reference);

}  // namespace chainrad
