#pragma once

#include <optional>

namespace chainrad {

/// Physical description of a uniform chain of identical two-level emitters.
///
/// Everything is stored in SI. Use `ChainConfig::make` to build one from the
/// laboratory units (Å, eV, e·Å, degrees) used by the configuration files.
struct ChainConfig {
    int n_atoms = 1;
    double lattice_const_m = 0.0;
    double transition_energy_ev = 0.0;
    double dipole_moment_cm = 0.0;
    /// Angle between the transition dipole and the chain axis, in [0, pi/2].
    double polarization_rad = 0.0;
    std::optional<double> gamma_override_hz;

    /// Builds a validated config from lab units. Polarization angles outside
    /// [0, 90] degrees are folded back using the cos^2 symmetry.
    static ChainConfig make(int n_atoms, double lattice_const_angstrom, double transition_energy_ev,
                            double dipole_e_angstrom, double polarization_deg,
                            std::optional<double> gamma_override_hz = std::nullopt);

    /// Throws ConfigError if an invariant is violated.
    void validate() const;
};

/// Folds any angle into [0, pi/2] preserving cos^2.
double fold_polarization(double phi_rad);

struct AtomicScales {
    double omega_a = 0.0;   // rad/s
    double q_a = 0.0;       // 1/m
    double lambda_a = 0.0;  // m
    double gamma_a = 0.0;   // 1/s
    bool gamma_overridden = false;
};

/// Single-atom spontaneous emission rate w^3 mu^2 / (3 pi eps0 hbar c^3).
double single_atom_decay_rate(double omega_a, double dipole_moment_cm);

AtomicScales derive_scales(const ChainConfig& config);

/// q_A a, the lattice constant in units of the reduced transition wavelength.
double dimensionless_separation(const ChainConfig& config);

}  // namespace chainrad
