#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chainrad/scales.hpp"
#include "chainrad/states.hpp"
#include "chainrad/sweep_table.hpp"

namespace chainrad {

/// Observation point on the x axis, atoms on the z axis at R_n = (n-1) a.
struct EmissionGeometry {
    double obs_x = 0.0;                       // m
    double polarization = 0.0;                // rad
    std::vector<double> atom_z;               // R_n, m
    std::vector<double> phi_n;                // angle between dipole and r - R_n
    std::vector<double> dist_n;               // |r - R_n|, m
    std::vector<double> retard_n;             // |r - R_n| / c, s
    std::vector<std::array<double, 3>> unit_n;  // (r - R_n) / |r - R_n|
    std::vector<std::string> advisories;

    std::size_t size() const noexcept { return atom_z.size(); }
    double max_retardation() const;
    /// d_i - d_j evaluated without cancellation.
    double path_difference(std::size_t i, std::size_t j) const;
};

/// Geometry for n atoms with spacing a >= 0 (a = 0 stacks them at the origin).
/// Throws DomainError for obs_x <= 0, a < 0 or n < 1.
EmissionGeometry build_geometry(int n_atoms, double lattice_const_m, double polarization,
                                double obs_x);

/// Same, taking N, a and phi from the config and adding a far-zone advisory
/// when obs_x < 10 lambda_A.
EmissionGeometry build_geometry(const ChainConfig& config, double obs_x);

/// I_0(x) = mu^2 omega^4 / (16 pi^2 eps0 c^3 x^2), in W/m^2.
double reference_intensity(double dipole_moment_cm, double omega_a, double obs_x);

/// Per-atom intensities I_i / I_0 (no interference terms).
std::vector<double> atom_intensities(const SignState& state, const EmissionGeometry& geom,
                                     const AtomicScales& scales, double t);

/// Retarded far-field intensity I(r, t) / I_0(x) of the chain prepared in
/// `state`, every correlator decaying at Gamma_A. Throws CausalityError when
/// t precedes the latest retarded time.
double total_intensity(const SignState& state, const EmissionGeometry& geom,
                       const AtomicScales& scales, double t);

enum class PairState { symmetric, antisymmetric };

/// Closed two-atom intensity (atom 1 at the origin, atom 2 at z = a).
double two_atom_intensity(PairState which, double a, double phi, double obs_x, double t,
                          const AtomicScales& scales);

/// x >> a limit of two_atom_intensity.
double two_atom_asymptotic(PairState which, double a, double phi, double obs_x, double t,
                           const AtomicScales& scales);

struct IntensityTrace {
    std::vector<std::pair<double, double>> rows;  // (grid value, I/I_0)
    double reference_intensity = 0.0;            // I_0(x), W/m^2
    std::vector<std::string> advisories;
};

/// Intensity vs lattice constant (grid in m) at fixed observation time.
/// Errors name the first grid point that violates causality.
IntensityTrace emission_sweep_a(const SignState& state, std::span<const double> a_grid,
                                double phi, double obs_x, double t, const ChainConfig& config,
                                const AtomicScales& scales);

/// Intensity vs observation time at fixed lattice constant.
IntensityTrace emission_sweep_t(const SignState& state, double a, std::span<const double> t_grid,
                                double phi, double obs_x, const ChainConfig& config,
                                const AtomicScales& scales);

/// Largest chain length (N-1) a whose far end is still causally connected at t.
double causal_lattice_limit(int n_atoms, double obs_x, double t);

}  // namespace chainrad
