#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chainrad/scales.hpp"
#include "chainrad/sweep_table.hpp"

namespace chainrad {

/// Below this separation the radiative coupling bracket is evaluated from its
/// Laurent expansion instead of the trigonometric form.
inline constexpr double kTransferSeriesThreshold = 1e-3;

/// Retarded dipole-dipole energy transfer J/Gamma_A between two parallel
/// dipoles at dimensionless separation x = q_A R, tilted by phi from the axis.
/// Throws DomainError for x <= 0.
double transfer_exact(double x, double phi);

/// Near-field (x^-3) resonance dipole-dipole limit of transfer_exact.
double transfer_electrostatic(double x, double phi);

namespace detail {
// sin x / x^2 + cos x / x^3, two ways.
double transfer_bracket_direct(double x);
double transfer_bracket_series(double x);
}  // namespace detail

/// Single-excitation hopping Hamiltonian of the chain (in units of hbar).
class CouplingMatrix {
public:
    CouplingMatrix(std::size_t dim, double diagonal, std::vector<double> off_diag);

    std::size_t dim() const noexcept { return dim_; }
    /// Site energy omega_A in rad/s.
    double diagonal() const noexcept { return diagonal_; }
    /// J_nm in 1/s; zero on the diagonal.
    double off_diag(std::size_t n, std::size_t m) const { return off_diag_.at(n * dim_ + m); }
    std::span<const double> off_diag_data() const noexcept { return off_diag_; }

private:
    std::size_t dim_;
    double diagonal_;
    std::vector<double> off_diag_;
};

/// Full (untruncated) coupling matrix, J_nm = Gamma_A transfer_exact(q_A a |n-m|, phi).
CouplingMatrix coupling_matrix(const ChainConfig& config);

/// Same, keeping only bonds with |n-m| <= max_range.
CouplingMatrix coupling_matrix(const ChainConfig& config, std::size_t max_range);

/// Uniform x grid with exact and electrostatic J/Gamma_A columns per angle.
/// Columns: x, J_exact_phi<deg>..., J_approx_phi<deg>...
SweepTable coupling_sweep(double x_min, double x_max, std::size_t n_points,
                          std::span<const double> phi_list);

}  // namespace chainrad
